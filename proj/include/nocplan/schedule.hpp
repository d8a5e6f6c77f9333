// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nocplan/test_model.hpp"

namespace nocplan {

struct PlanOptions {
    /// Budget as a fraction of total test power; absent or ≥ 1 is unconstrained.
    std::optional<Fraction> power_fraction;
    /// Reuse only the first k processors (by id) as endpoints; absent = all.
    std::optional<std::size_t> processors_reused;
    /// Overlapping sessions must use disjoint directed links.
    bool exclusive_links = true;
    /// Processor self-tests head the test order.
    bool processor_first = true;
};

/// One CUT tested from one source to one sink over [start, end).
struct TestSession {
    ModuleId cut_id = 0;
    Endpoint source;
    Endpoint sink;
    Cycles start = 0;
    Cycles end = 0;
    Power power = 0;
    Path inbound_path;
    Path outbound_path;

    friend bool operator==(const TestSession&, const TestSession&) = default;
};

struct Schedule {
    /// Sorted by (start, cut_id).
    std::vector<TestSession> sessions;
    Cycles makespan = 0;
    std::optional<Power> budget;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Sorts sessions by (start, cut_id) and recomputes the makespan.
void normalize(Schedule& sched);

struct ProfilePoint {
    Cycles time = 0;
    Power power = 0;

    friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

/// Right-open step function of total drawn power, one point per distinct
/// session start/end instant (plus t = 0). An empty schedule yields [(0, 0)].
std::vector<ProfilePoint> power_profile(const Schedule& sched);

Power peak_power(const Schedule& sched);

/// Schedule CSV. `exact` is appended to the trailing comment when given.
std::string to_csv(const Schedule& sched, std::optional<bool> exact = std::nullopt);

}  // namespace nocplan
