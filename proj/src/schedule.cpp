// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "nocplan/schedule.hpp"

#include <algorithm>
#include <sstream>

#include "nocplan/kernels.hpp"

namespace nocplan {

void normalize(Schedule& sched) {
    std::stable_sort(sched.sessions.begin(), sched.sessions.end(), [](const TestSession& a, const TestSession& b) {
        return std::tie(a.start, a.cut_id) < std::tie(b.start, b.cut_id);
    });
    sched.makespan = 0;
    for (const auto& s : sched.sessions) sched.makespan = std::max(sched.makespan, s.end);
}

std::vector<ProfilePoint> power_profile(const Schedule& sched) {
    const std::size_t n = sched.sessions.size();
    std::vector<std::uint64_t> start(n), end(n), power(n);
    std::vector<Cycles> instants{0};
    instants.reserve(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        start[i] = sched.sessions[i].start;
        end[i] = sched.sessions[i].end;
        power[i] = sched.sessions[i].power;
        instants.push_back(start[i]);
        instants.push_back(end[i]);
    }
    std::sort(instants.begin(), instants.end());
    instants.erase(std::unique(instants.begin(), instants.end()), instants.end());

    std::vector<ProfilePoint> profile;
    profile.reserve(instants.size());
    for (Cycles t : instants) profile.push_back({t, kernels::active_power_at(start, end, power, t)});
    return profile;
}

Power peak_power(const Schedule& sched) {
    Power peak = 0;
    for (const auto& p : power_profile(sched)) peak = std::max(peak, p.power);
    return peak;
}

std::string to_csv(const Schedule& sched, std::optional<bool> exact) {
    std::vector<const TestSession*> rows;
    rows.reserve(sched.sessions.size());
    for (const auto& s : sched.sessions) rows.push_back(&s);
    std::stable_sort(rows.begin(), rows.end(), [](const TestSession* a, const TestSession* b) {
        return std::tie(a->start, a->cut_id) < std::tie(b->start, b->cut_id);
    });

    std::ostringstream out;
    out << "cut_id,source_kind,source_id,sink_kind,sink_id,start,end,power,in_hops,out_hops\n";
    for (const auto* s : rows) {
        out << s->cut_id << ',' << to_string(s->source.kind) << ',' << s->source.ref_id << ','
            << to_string(s->sink.kind) << ',' << s->sink.ref_id << ',' << s->start << ',' << s->end << ','
            << s->power << ',' << s->inbound_path.hops() << ',' << s->outbound_path.hops() << '\n';
    }
    out << "# makespan=" << sched.makespan << " peak_power=" << peak_power(sched);
    if (exact) out << " exact=" << (*exact ? "true" : "false");
    out << '\n';
    return out.str();
}

}  // namespace nocplan
