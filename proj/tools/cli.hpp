// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nocplan::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { ok = 0, validation = 1, usage = 2, infeasible = 3 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nocplan::cli
