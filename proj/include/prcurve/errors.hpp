// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace prc {

// Reason codes for domain-rule violations.
enum class Errc {
  EmptyClass,          // a class with zero members where one is required
  UndefinedPrecision,  // no predicted positives (tpr = fpr = 0)
  UndefinedF,          // F-score undefined (zero recall, or bad beta)
  UndefinedGain,       // gains undefined at tpr = 0
  DegenerateRatio,     // class ratio not in (0, inf), or pi not in (0, 1)
  RatioMismatch,       // declared ratio contradicts the curve's sample counts
  UnachievableRatio,   // target ratio needs more samples than available
  BadCovariance,       // covariance not symmetric positive-definite
  Diverged,            // training parameters or loss became non-finite
  EmptyCurve,          // area or lookup on an empty curve
  InvalidCurve,        // curve points violate ordering or range invariants
  NegativeCount,       // confusion counts must be non-negative
  NonFiniteScore,      // sample scores must be finite
  BadConfig,           // invalid grid or training configuration
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  DomainError(Errc code, const std::string& what) : Error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Malformed input text; line is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long line = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace prc
