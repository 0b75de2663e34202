// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "fermice/cli/commands.hpp"

int main(int argc, char** argv) { return fermice::cli::run_cli(argc, argv, std::cout, std::cerr); }
