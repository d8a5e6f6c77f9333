// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include <future>
#include <sstream>
#include <stdexcept>

#include "nocplan/report.hpp"

namespace nocplan {

std::vector<SweepRow> run_sweep(const SystemDescription& sys, const SweepSpec& spec) {
    if (spec.processor_counts.empty()) throw std::invalid_argument("sweep needs at least one processor count");
    if (spec.power_fractions.empty()) throw std::invalid_argument("sweep needs at least one power fraction");
    for (auto k : spec.processor_counts)
        if (k > sys.processors.size())
            throw std::invalid_argument("processor count " + std::to_string(k) + " exceeds the " +
                                        std::to_string(sys.processors.size()) + " processors in the system");

    std::vector<std::future<SweepRow>> cells;
    for (auto k : spec.processor_counts) {
        for (const auto& f : spec.power_fractions) {
            cells.push_back(std::async(std::launch::async, [&sys, &spec, k, f] {
                SweepRow row;
                row.processors = k;
                row.power_fraction = f;
                PlanOptions opts;
                opts.power_fraction = f;
                opts.processors_reused = k;
                opts.exclusive_links = spec.exclusive_links;
                try {
                    const auto sched = plan(sys, opts);
                    row.feasible = true;
                    row.makespan = sched.makespan;
                    row.peak_power = peak_power(sched);
                } catch (const InfeasibleError&) {
                    row.feasible = false;
                }
                return row;
            }));
        }
    }
    std::vector<SweepRow> rows;
    rows.reserve(cells.size());
    for (auto& c : cells) rows.push_back(c.get());
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "processors,power_fraction,makespan,peak_power,feasible\n";
    for (const auto& r : rows) {
        out << r.processors << ',' << (r.power_fraction ? r.power_fraction->to_string() : "none") << ',';
        if (r.feasible)
            out << r.makespan << ',' << r.peak_power << ",true\n";
        else
            out << ",,false\n";
    }
    return out.str();
}

}  // namespace nocplan
