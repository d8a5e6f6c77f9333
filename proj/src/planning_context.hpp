// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

// Precomputed planning instance shared by the greedy planner and the
// exhaustive oracle: endpoint pool, ordered task list and every
// role-valid (source, sink) candidate per task with its cost.

#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "nocplan/schedule.hpp"
#include "nocplan/sysdesc.hpp"

namespace nocplan::detail {

inline constexpr Cycles kNever = std::numeric_limits<Cycles>::max();
inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Candidate {
    std::size_t source = 0;  // index into PlanningContext::endpoints
    std::size_t sink = 0;
    std::uint32_t hops = 0;
    SessionCost cost;
    LinkMask links;
};

struct Task {
    CoreSpec cut;
    bool is_processor = false;
    /// Endpoint index of this processor when it is reused, else kNone.
    std::size_t endpoint = kNone;
    std::vector<Candidate> candidates;
    Cycles min_duration = 0;
};

struct PlanningContext {
    const SystemDescription* sys = nullptr;
    std::vector<Endpoint> endpoints;  // IO ports by id, then reused processors by id
    std::vector<Task> tasks;          // in test order
    std::optional<Power> budget;
    bool exclusive_links = true;
    /// Cycle from which each endpoint may serve: 0, or kNever for a reused
    /// processor whose self-test is still pending.
    std::vector<Cycles> initial_ready;
};

/// Builds the context and proves that every task can eventually start
/// (throws InfeasibleError otherwise).
PlanningContext build_context(const SystemDescription& sys, const PlanOptions& opts);

/// Ranking of a feasible candidate at an instant; smaller is preferred.
using CandidateKey = std::tuple<Cycles, std::uint32_t, int, std::uint32_t, int, std::uint32_t>;

inline CandidateKey candidate_key(const PlanningContext& ctx, const Candidate& c, Cycles source_free_since,
                                  Cycles sink_free_since) {
    const auto& src = ctx.endpoints[c.source];
    const auto& snk = ctx.endpoints[c.sink];
    const auto rank = [](const Endpoint& e) { return e.kind == EndpointKind::processor ? 1 : 0; };
    return {std::max(source_free_since, sink_free_since), c.hops, rank(src), src.ref_id, rank(snk), snk.ref_id};
}

TestSession make_session(const PlanningContext& ctx, const Task& task, const Candidate& c, Cycles start);

}  // namespace nocplan::detail
