// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "nocplan/oracle.hpp"

#include <algorithm>
#include <array>

#include "planning_context.hpp"

namespace nocplan {

using detail::Candidate;
using detail::CandidateKey;
using detail::kNever;
using detail::kNone;

namespace {

struct Active {
    std::size_t task;
    const Candidate* cand;
    Cycles end;
};

class Search {
   public:
    Search(const detail::PlanningContext& ctx, const OracleLimits& limits, Schedule incumbent)
        : ctx_(ctx),
          limits_(limits),
          free_since_(ctx.initial_ready),
          started_(ctx.tasks.size(), false),
          remaining_(ctx.tasks.size()),
          best_(std::move(incumbent)) {}

    void run() { descend(0, 0, 0); }

    const Schedule& best() const { return best_; }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

   private:
    Cycles lower_bound(Cycles t, Cycles max_end) const {
        Cycles lb = max_end;
        for (std::size_t i = 0; i < ctx_.tasks.size(); ++i) {
            if (started_[i]) continue;
            Cycles earliest = kNever;
            for (const auto& c : ctx_.tasks[i].candidates) {
                Cycles ready = t;
                if (free_since_[c.source] != kNever) ready = std::max(ready, free_since_[c.source]);
                if (free_since_[c.sink] != kNever) ready = std::max(ready, free_since_[c.sink]);
                earliest = std::min(earliest, ready + c.cost.duration);
            }
            lb = std::max(lb, earliest);
        }
        return lb;
    }

    void descend(Cycles t, std::size_t from, Cycles max_end) {
        if (exhausted_) return;
        if (++nodes_ > limits_.max_nodes) {
            exhausted_ = true;
            return;
        }
        if (remaining_ == 0) {
            if (max_end < best_.makespan) record();
            return;
        }
        if (lower_bound(t, max_end) >= best_.makespan) return;

        Power running = 0;
        LinkMask links(ctx_.sys->noc);
        for (const auto& a : active_) {
            if (a.end <= t) continue;
            running += a.cand->cost.power;
            links.merge(a.cand->links);
        }

        std::vector<std::pair<CandidateKey, const Candidate*>> options;
        for (std::size_t i = from; i < ctx_.tasks.size(); ++i) {
            if (started_[i]) continue;
            const auto& task = ctx_.tasks[i];
            options.clear();
            for (const auto& c : task.candidates) {
                if (free_since_[c.source] > t || free_since_[c.sink] > t) continue;
                if (ctx_.budget && running + c.cost.power > *ctx_.budget) continue;
                if (ctx_.exclusive_links && c.links.intersects(links)) continue;
                options.emplace_back(detail::candidate_key(ctx_, c, free_since_[c.source], free_since_[c.sink]), &c);
            }
            std::sort(options.begin(), options.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            const auto snapshot = options;
            for (const auto& [key, c] : snapshot) {
                start(i, *c, t);
                descend(t, i + 1, std::max(max_end, t + c->cost.duration));
                undo(i, *c);
                if (exhausted_) return;
            }
        }

        Cycles next = kNever;
        for (const auto& a : active_)
            if (a.end > t) next = std::min(next, a.end);
        if (next != kNever) descend(next, 0, max_end);
    }

    void start(std::size_t i, const Candidate& c, Cycles t) {
        const auto& task = ctx_.tasks[i];
        const Cycles end = t + c.cost.duration;
        saved_.push_back({free_since_[c.source], free_since_[c.sink],
                          task.endpoint == kNone ? 0 : free_since_[task.endpoint]});
        free_since_[c.source] = end;
        free_since_[c.sink] = end;
        if (task.endpoint != kNone) free_since_[task.endpoint] = end;
        started_[i] = true;
        --remaining_;
        active_.push_back({i, &c, end});
        path_.push_back(detail::make_session(ctx_, task, c, t));
    }

    void undo(std::size_t i, const Candidate& c) {
        const auto& task = ctx_.tasks[i];
        const auto s = saved_.back();
        saved_.pop_back();
        if (task.endpoint != kNone) free_since_[task.endpoint] = s[2];
        free_since_[c.sink] = s[1];
        free_since_[c.source] = s[0];
        started_[i] = false;
        ++remaining_;
        active_.pop_back();
        path_.pop_back();
    }

    void record() {
        best_.sessions = path_;
        normalize(best_);
    }

    const detail::PlanningContext& ctx_;
    OracleLimits limits_;
    std::vector<Cycles> free_since_;
    std::vector<bool> started_;
    std::size_t remaining_;
    std::vector<Active> active_;
    std::vector<std::array<Cycles, 3>> saved_;
    std::vector<TestSession> path_;
    Schedule best_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

OracleResult optimal_plan(const SystemDescription& sys, const PlanOptions& opts, const OracleLimits& limits) {
    const auto ctx = detail::build_context(sys, opts);
    if (ctx.tasks.size() > limits.max_modules)
        throw TooLargeError(std::to_string(ctx.tasks.size()) + " modules to test exceed the oracle limit of " +
                            std::to_string(limits.max_modules));

    // The greedy schedule is the search's first leaf; seeding with it lets
    // the search keep only strictly better schedules.
    Search search(ctx, limits, plan(sys, opts));
    search.run();

    OracleResult result;
    result.schedule = search.best();
    result.schedule.budget = ctx.budget;
    result.exact = !search.exhausted();
    result.nodes = search.nodes();
    return result;
}

double Comparison::gap() const {
    if (optimal_makespan == 0) return greedy_makespan == 0 ? 1.0 : 0.0;
    return static_cast<double>(greedy_makespan) / static_cast<double>(optimal_makespan);
}

Comparison compare(const SystemDescription& sys, const PlanOptions& opts, const OracleLimits& limits) {
    Comparison c;
    c.greedy = plan(sys, opts);
    auto opt = optimal_plan(sys, opts, limits);
    c.optimal = std::move(opt.schedule);
    c.exact = opt.exact;
    c.greedy_makespan = c.greedy.makespan;
    c.optimal_makespan = c.optimal.makespan;
    return c;
}

}  // namespace nocplan
