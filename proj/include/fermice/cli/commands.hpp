// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace fermice::cli {

/// Runs the command line. Returns 0 on success, 1 when an identity check
/// fails, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermice::cli
