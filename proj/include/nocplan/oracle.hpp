// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <cstdint>

#include "nocplan/scheduler.hpp"

namespace nocplan {

struct OracleLimits {
    std::size_t max_modules = 6;
    std::uint64_t max_nodes = 10'000'000;
};

class TooLargeError : public Error {
   public:
    using Error::Error;
};

struct OracleResult {
    Schedule schedule;
    /// False when the node budget ran out; `schedule` is then the best found.
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// Minimum-makespan schedule under the planner's feasibility rules, found
/// by depth-first branch and bound. Sessions start only at cycle 0 or at
/// the end of another session. The search explores the greedy planner's
/// choices first, so its first leaf is plan()'s schedule; only strictly
/// better schedules replace it.
///
/// Throws TooLargeError when more than `limits.max_modules` modules need
/// testing, and InfeasibleError exactly when plan() would.
OracleResult optimal_plan(const SystemDescription& sys, const PlanOptions& opts, const OracleLimits& limits = {});

struct Comparison {
    Cycles greedy_makespan = 0;
    Cycles optimal_makespan = 0;
    bool exact = true;
    Schedule greedy;
    Schedule optimal;

    /// greedy / optimal, 1.0 when both are zero.
    double gap() const;
};

Comparison compare(const SystemDescription& sys, const PlanOptions& opts, const OracleLimits& limits = {});

}  // namespace nocplan
