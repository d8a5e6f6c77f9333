// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "planning_context.hpp"

#include <algorithm>
#include <stdexcept>

namespace nocplan::detail {

namespace {

std::vector<const ProcessorSpec*> reused_processors(const SystemDescription& sys, const PlanOptions& opts) {
    std::vector<const ProcessorSpec*> procs;
    for (const auto& p : sys.processors) procs.push_back(&p);
    std::sort(procs.begin(), procs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    const std::size_t k = opts.processors_reused.value_or(procs.size());
    if (k > procs.size())
        throw std::invalid_argument("processors_reused = " + std::to_string(k) + " exceeds the " +
                                    std::to_string(procs.size()) + " processors in the system");
    procs.resize(k);
    return procs;
}

Task make_task(const PlanningContext& ctx, CoreSpec cut, bool is_processor, std::size_t own_endpoint) {
    const auto& noc = ctx.sys->noc;
    Task task;
    task.cut = std::move(cut);
    task.is_processor = is_processor;
    task.endpoint = own_endpoint;
    task.min_duration = kNever;
    for (std::size_t s = 0; s < ctx.endpoints.size(); ++s) {
        if (s == own_endpoint || !ctx.endpoints[s].can_source()) continue;
        for (std::size_t k = 0; k < ctx.endpoints.size(); ++k) {
            if (k == own_endpoint || !ctx.endpoints[k].can_sink()) continue;
            Candidate c;
            c.source = s;
            c.sink = k;
            c.cost = session_cost(noc, task.cut, ctx.endpoints[s], ctx.endpoints[k]);
            c.hops = c.cost.inbound_path.hops() + c.cost.outbound_path.hops();
            c.links = LinkMask(noc);
            c.links.add(noc, c.cost.inbound_path);
            c.links.add(noc, c.cost.outbound_path);
            task.min_duration = std::min(task.min_duration, c.cost.duration);
            task.candidates.push_back(std::move(c));
        }
    }
    return task;
}

// A task can run alone once every endpoint it needs has been proven
// available; grow that set to a fixpoint starting from the IO ports and
// pre-tested processors.
void check_feasible(const PlanningContext& ctx) {
    std::vector<bool> available(ctx.endpoints.size());
    for (std::size_t e = 0; e < ctx.endpoints.size(); ++e) available[e] = ctx.initial_ready[e] == 0;

    auto fits = [&](const Candidate& c) { return !ctx.budget || c.cost.power <= *ctx.budget; };
    auto can_run = [&](const Task& t) {
        return std::any_of(t.candidates.begin(), t.candidates.end(),
                           [&](const Candidate& c) { return available[c.source] && available[c.sink] && fits(c); });
    };

    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& t : ctx.tasks) {
            if (t.endpoint != kNone && !available[t.endpoint] && can_run(t)) {
                available[t.endpoint] = true;
                grew = true;
            }
        }
    }

    for (const auto& t : ctx.tasks) {
        if (can_run(t)) continue;
        if (t.candidates.empty()) throw InfeasibleError(t.cut.id, "no role-valid source/sink pair exists");
        const bool any_fits = std::any_of(t.candidates.begin(), t.candidates.end(), fits);
        if (!any_fits) {
            Power cheapest = kNever;
            for (const auto& c : t.candidates) cheapest = std::min(cheapest, c.cost.power);
            throw InfeasibleError(t.cut.id, "cheapest session draws " + std::to_string(cheapest) +
                                                " power units, budget is " + std::to_string(*ctx.budget));
        }
        throw InfeasibleError(t.cut.id, "every session within budget needs a processor that can never be tested");
    }
}

}  // namespace

PlanningContext build_context(const SystemDescription& sys, const PlanOptions& opts) {
    PlanningContext ctx;
    ctx.sys = &sys;
    ctx.budget = effective_budget(sys, opts.power_fraction);
    ctx.exclusive_links = opts.exclusive_links;

    std::vector<const IoPort*> ports;
    for (const auto& p : sys.io_ports) ports.push_back(&p);
    std::sort(ports.begin(), ports.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* p : ports) {
        ctx.endpoints.push_back(Endpoint::port(*p));
        ctx.initial_ready.push_back(0);
    }
    const auto procs = reused_processors(sys, opts);
    for (const auto* p : procs) {
        ctx.endpoints.push_back(Endpoint::processor(*p));
        ctx.initial_ready.push_back(p->self_test.pattern_count == 0 ? 0 : kNever);
    }
    auto endpoint_of = [&](ModuleId id) -> std::size_t {
        for (std::size_t i = 0; i < procs.size(); ++i)
            if (procs[i]->id == id) return ports.size() + i;
        return kNone;
    };

    struct Pending {
        PriorityKey key;
        bool is_processor;
        CoreSpec cut;
    };
    std::vector<Pending> pending;
    for (const auto& p : sys.processors)
        if (p.self_test.pattern_count > 0) pending.push_back({priority_key(sys, p.position, p.id), true, as_cut(p)});
    for (const auto& c : sys.cores)
        if (c.test.pattern_count > 0) pending.push_back({priority_key(sys, c.position, c.id), false, c});
    std::stable_sort(pending.begin(), pending.end(), [&](const Pending& a, const Pending& b) {
        if (opts.processor_first && a.is_processor != b.is_processor) return a.is_processor;
        return a.key < b.key;
    });

    for (auto& p : pending) {
        const auto own = p.is_processor ? endpoint_of(p.cut.id) : kNone;
        ctx.tasks.push_back(make_task(ctx, std::move(p.cut), p.is_processor, own));
    }

    check_feasible(ctx);
    return ctx;
}

TestSession make_session(const PlanningContext& ctx, const Task& task, const Candidate& c, Cycles start) {
    TestSession s;
    s.cut_id = task.cut.id;
    s.source = ctx.endpoints[c.source];
    s.sink = ctx.endpoints[c.sink];
    s.start = start;
    s.end = start + c.cost.duration;
    s.power = c.cost.power;
    s.inbound_path = c.cost.inbound_path;
    s.outbound_path = c.cost.outbound_path;
    return s;
}

}  // namespace nocplan::detail
