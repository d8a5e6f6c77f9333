// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nocplan/schedule.hpp"
#include "nocplan/sysdesc.hpp"

namespace nocplan {

/// Greedy, priority-ordered, event-driven test planner.
///
/// Modules are scanned in priority order (processor self-tests first, then
/// cores closest to a port or processor). At every event instant each
/// untested module takes the first feasible (source, sink) pair, where
/// pairs are ranked by how long both endpoints have been free, then by
/// total hop distance, then by endpoint id. A pair is feasible when both
/// endpoints are idle (processors only after their own self-test), the
/// power budget holds, and, with exclusive links, its links are unused.
///
/// Throws InfeasibleError naming the first module that can never start,
/// and std::invalid_argument when processors_reused exceeds the processor
/// count.
Schedule plan(const SystemDescription& sys, const PlanOptions& opts);

enum class ViolationKind {
    missing_module,
    duplicate_module,
    unknown_module,
    role_violation,
    endpoint_not_reusable,
    endpoint_overlap,
    power_exceeded,
    precedence_violation,
    link_conflict,
    cost_mismatch,
    makespan_mismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Independent checker for any schedule against the planning rules.
/// Returns every violation found; empty means the schedule is valid.
std::vector<Violation> validate_schedule(const SystemDescription& sys, const PlanOptions& opts, const Schedule& sched);

}  // namespace nocplan
