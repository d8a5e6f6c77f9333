// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

// Schedule checker. Deliberately shares nothing with the planner beyond
// the system model and the per-session cost model.

#include <algorithm>
#include <map>
#include <set>

#include "nocplan/scheduler.hpp"

namespace nocplan {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::missing_module: return "MissingModule";
        case ViolationKind::duplicate_module: return "DuplicateModule";
        case ViolationKind::unknown_module: return "UnknownModule";
        case ViolationKind::role_violation: return "RoleViolation";
        case ViolationKind::endpoint_not_reusable: return "EndpointNotReusable";
        case ViolationKind::endpoint_overlap: return "EndpointOverlap";
        case ViolationKind::power_exceeded: return "PowerExceeded";
        case ViolationKind::precedence_violation: return "PrecedenceViolation";
        case ViolationKind::link_conflict: return "LinkConflict";
        case ViolationKind::cost_mismatch: return "CostMismatch";
        case ViolationKind::makespan_mismatch: return "MakespanMismatch";
    }
    return "?";
}

namespace {

std::string label(const TestSession& s) {
    return "session(cut " + std::to_string(s.cut_id) + ", [" + std::to_string(s.start) + "," + std::to_string(s.end) +
           "))";
}

bool overlaps(const TestSession& a, const TestSession& b) { return a.start < b.end && b.start < a.end; }

using Resource = std::pair<EndpointKind, std::uint32_t>;

std::set<Resource> resources(const TestSession& s) {
    std::set<Resource> r{{s.source.kind, s.source.ref_id}, {s.sink.kind, s.sink.ref_id}};
    return r;
}

}  // namespace

std::vector<Violation> validate_schedule(const SystemDescription& sys, const PlanOptions& opts, const Schedule& sched) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind k, std::string msg) { out.push_back({k, std::move(msg)}); };

    // Which processors may serve as endpoints: the first k by id.
    std::vector<ModuleId> proc_ids;
    for (const auto& p : sys.processors) proc_ids.push_back(p.id);
    std::sort(proc_ids.begin(), proc_ids.end());
    const std::size_t k = std::min(opts.processors_reused.value_or(proc_ids.size()), proc_ids.size());
    const std::set<ModuleId> reusable(proc_ids.begin(), proc_ids.begin() + static_cast<std::ptrdiff_t>(k));

    // (a) coverage
    std::map<ModuleId, const TestSession*> by_cut;
    for (const auto& s : sched.sessions) {
        const bool known = sys.find_core(s.cut_id) || sys.find_processor(s.cut_id);
        if (!known) {
            report(ViolationKind::unknown_module, label(s) + " tests an unknown module");
            continue;
        }
        if (!by_cut.emplace(s.cut_id, &s).second)
            report(ViolationKind::duplicate_module, "module " + std::to_string(s.cut_id) + " tested more than once");
    }
    for (const auto& c : sys.cores)
        if (c.test.pattern_count > 0 && !by_cut.count(c.id))
            report(ViolationKind::missing_module, "core " + std::to_string(c.id) + " is never tested");
    for (const auto& p : sys.processors)
        if (p.self_test.pattern_count > 0 && !by_cut.count(p.id))
            report(ViolationKind::missing_module, "processor " + std::to_string(p.id) + " self-test is missing");

    // Endpoint resolution, roles and the cost model (f).
    for (const auto& s : sched.sessions) {
        const CoreSpec* core = sys.find_core(s.cut_id);
        const ProcessorSpec* self = sys.find_processor(s.cut_id);
        if (!core && !self) continue;
        const CoreSpec cut = core ? *core : as_cut(*self);

        auto resolve = [&](const Endpoint& e, bool as_source) -> std::optional<Endpoint> {
            if (e.kind == EndpointKind::processor) {
                const auto* p = sys.find_processor(e.ref_id);
                if (!p) {
                    report(ViolationKind::role_violation, label(s) + " uses unknown processor " + std::to_string(e.ref_id));
                    return std::nullopt;
                }
                if (!reusable.count(p->id))
                    report(ViolationKind::endpoint_not_reusable,
                           label(s) + " uses processor " + std::to_string(p->id) + " which is not reused");
                if (p->id == s.cut_id)
                    report(ViolationKind::role_violation, label(s) + " uses the processor under test as an endpoint");
                return Endpoint::processor(*p);
            }
            const auto* port = sys.find_port(e.ref_id);
            const auto want = as_source ? PortDirection::input : PortDirection::output;
            if (!port || port->direction != want) {
                report(ViolationKind::role_violation, label(s) + " uses " + std::string(to_string(e.kind)) + " " +
                                                          std::to_string(e.ref_id) + " as " +
                                                          (as_source ? "source" : "sink"));
                return std::nullopt;
            }
            return Endpoint::port(*port);
        };
        const auto src = resolve(s.source, true);
        const auto snk = resolve(s.sink, false);
        if (!src || !snk) continue;
        if (!same_resource(*src, s.source) || !same_resource(*snk, s.sink) || src->position != s.source.position ||
            snk->position != s.sink.position) {
            report(ViolationKind::cost_mismatch, label(s) + " endpoint positions disagree with the system");
            continue;
        }
        try {
            const auto cost = session_cost(sys.noc, cut, *src, *snk);
            if (s.end < s.start || s.end - s.start != cost.duration)
                report(ViolationKind::cost_mismatch, label(s) + " lasts " + std::to_string(s.end - s.start) +
                                                         " cycles, model says " + std::to_string(cost.duration));
            if (s.power != cost.power)
                report(ViolationKind::cost_mismatch, label(s) + " draws " + std::to_string(s.power) +
                                                         ", model says " + std::to_string(cost.power));
            if (s.inbound_path != cost.inbound_path || s.outbound_path != cost.outbound_path)
                report(ViolationKind::cost_mismatch, label(s) + " paths are not the XY routes");
        } catch (const RoleError& e) {
            report(ViolationKind::role_violation, label(s) + ": " + e.what());
        }
    }

    // (b) endpoint exclusivity and (e) link exclusivity
    const auto& ss = sched.sessions;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        for (std::size_t j = i + 1; j < ss.size(); ++j) {
            if (!overlaps(ss[i], ss[j])) continue;
            const auto ri = resources(ss[i]);
            const auto rj = resources(ss[j]);
            const bool shared = std::any_of(ri.begin(), ri.end(), [&](const Resource& r) { return rj.count(r) > 0; });
            if (shared)
                report(ViolationKind::endpoint_overlap, label(ss[i]) + " and " + label(ss[j]) + " share an endpoint");
            if (opts.exclusive_links) {
                auto li = path_links(ss[i].inbound_path);
                li.merge(path_links(ss[i].outbound_path));
                auto lj = path_links(ss[j].inbound_path);
                lj.merge(path_links(ss[j].outbound_path));
                const bool clash = std::any_of(li.begin(), li.end(), [&](const Link& l) { return lj.count(l) > 0; });
                if (clash)
                    report(ViolationKind::link_conflict, label(ss[i]) + " and " + label(ss[j]) + " share a link");
            }
        }
    }

    // (c) power at every session start
    const std::optional<Power> budget =
        (!opts.power_fraction || opts.power_fraction->num() >= opts.power_fraction->den())
            ? std::nullopt
            : std::optional<Power>(opts.power_fraction->scale_floor(total_test_power(sys)));
    if (budget) {
        std::set<Cycles> starts;
        for (const auto& s : ss) starts.insert(s.start);
        for (Cycles t : starts) {
            Power sum = 0;
            for (const auto& s : ss)
                if (s.start <= t && t < s.end) sum += s.power;
            if (sum > *budget)
                report(ViolationKind::power_exceeded, "power " + std::to_string(sum) + " at cycle " + std::to_string(t) +
                                                          " exceeds budget " + std::to_string(*budget));
        }
    }

    // (d) a processor serves only after its own self-test ends
    for (const auto& s : ss) {
        for (const Endpoint* e : {&s.source, &s.sink}) {
            if (e->kind != EndpointKind::processor || e->ref_id == s.cut_id) continue;
            if (e == &s.sink && same_resource(s.source, s.sink)) continue;  // already checked as source
            const auto* p = sys.find_processor(e->ref_id);
            if (!p || p->self_test.pattern_count == 0) continue;
            auto it = by_cut.find(p->id);
            if (it == by_cut.end() || it->second->end > s.start)
                report(ViolationKind::precedence_violation,
                       label(s) + " uses processor " + std::to_string(p->id) + " before its self-test has finished");
        }
    }

    Cycles makespan = 0;
    for (const auto& s : ss) makespan = std::max(makespan, s.end);
    if (makespan != sched.makespan)
        report(ViolationKind::makespan_mismatch, "makespan " + std::to_string(sched.makespan) +
                                                     " but the last session ends at " + std::to_string(makespan));
    return out;
}

}  // namespace nocplan
