// SPDX-License-Identifier: Apache-2.0

#include "prcurve/cli.hpp"

int main(int argc, char** argv) { return prc::cli::run(argc, argv); }
