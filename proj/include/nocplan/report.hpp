// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nocplan/scheduler.hpp"

namespace nocplan {

/// Grid of plan() runs: processor counts × power fractions (nullopt = none).
struct SweepSpec {
    std::vector<std::size_t> processor_counts;
    std::vector<std::optional<Fraction>> power_fractions;
    bool exclusive_links = true;
};

struct SweepRow {
    std::size_t processors = 0;
    std::optional<Fraction> power_fraction;
    bool feasible = false;
    Cycles makespan = 0;
    Power peak_power = 0;
};

/// One row per (processors, fraction), processors outer. Cells run
/// concurrently; row order is fixed. Infeasible cells are rows with
/// feasible = false. Throws std::invalid_argument on empty lists.
std::vector<SweepRow> run_sweep(const SystemDescription& sys, const SweepSpec& spec);

/// Header `processors,power_fraction,makespan,peak_power,feasible`;
/// infeasible cells leave makespan and peak_power empty.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// SVG Gantt chart: one lane per endpoint resource (IO ports, then
/// processors), one bar per session on each lane it occupies, x in cycles.
std::string gantt_svg(const SystemDescription& sys, const Schedule& sched);

}  // namespace nocplan
