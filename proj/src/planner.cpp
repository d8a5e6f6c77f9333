// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include <algorithm>
#include <stdexcept>

#include "nocplan/scheduler.hpp"
#include "planning_context.hpp"

namespace nocplan {

using detail::Candidate;
using detail::CandidateKey;
using detail::kNever;
using detail::kNone;

Schedule plan(const SystemDescription& sys, const PlanOptions& opts) {
    const auto ctx = detail::build_context(sys, opts);

    // free_since[e]: instant the endpoint last became idle (or ready).
    std::vector<Cycles> free_since = ctx.initial_ready;
    std::vector<bool> started(ctx.tasks.size(), false);
    std::vector<std::size_t> active;  // indices into sched.sessions
    std::vector<const Candidate*> active_cands;
    LinkMask active_links(sys.noc);
    Power running_power = 0;

    Schedule sched;
    sched.budget = ctx.budget;
    std::size_t remaining = ctx.tasks.size();
    Cycles t = 0;

    while (remaining > 0) {
        for (std::size_t i = 0; i < ctx.tasks.size(); ++i) {
            if (started[i]) continue;
            const auto& task = ctx.tasks[i];
            const Candidate* best = nullptr;
            CandidateKey best_key{};
            for (const auto& c : task.candidates) {
                if (free_since[c.source] > t || free_since[c.sink] > t) continue;
                if (ctx.budget && running_power + c.cost.power > *ctx.budget) continue;
                if (ctx.exclusive_links && c.links.intersects(active_links)) continue;
                const auto key = detail::candidate_key(ctx, c, free_since[c.source], free_since[c.sink]);
                if (!best || key < best_key) {
                    best = &c;
                    best_key = key;
                }
            }
            if (!best) continue;

            sched.sessions.push_back(detail::make_session(ctx, task, *best, t));
            const Cycles end = sched.sessions.back().end;
            free_since[best->source] = end;
            free_since[best->sink] = end;
            if (task.endpoint != kNone) free_since[task.endpoint] = end;
            running_power += best->cost.power;
            active_links.merge(best->links);
            active.push_back(sched.sessions.size() - 1);
            active_cands.push_back(best);
            started[i] = true;
            --remaining;
        }
        if (remaining == 0) break;

        Cycles next = kNever;
        for (auto idx : active) next = std::min(next, sched.sessions[idx].end);
        if (next == kNever) {
            // build_context proved some task can start on an idle system.
            throw std::logic_error("planner stalled at cycle " + std::to_string(t));
        }
        t = next;

        running_power = 0;
        active_links.clear();
        std::size_t kept = 0;
        for (std::size_t a = 0; a < active.size(); ++a) {
            if (sched.sessions[active[a]].end <= t) continue;
            running_power += active_cands[a]->cost.power;
            active_links.merge(active_cands[a]->links);
            active[kept] = active[a];
            active_cands[kept] = active_cands[a];
            ++kept;
        }
        active.resize(kept);
        active_cands.resize(kept);
    }

    normalize(sched);
    return sched;
}

}  // namespace nocplan
