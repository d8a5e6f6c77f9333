// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include <random>
#include <utility>

#include "nocplan/sysdesc.hpp"

namespace nocplan {

namespace {

// std::uniform_int_distribution is implementation-defined; this draw is not,
// so generated instances are identical across standard libraries.
class Draw {
   public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = 0;
        do v = rng_();
        while (v >= limit);
        return v % n;
    }

    std::uint64_t in(Range r) {
        if (r.max <= r.min) return r.min;
        return r.min + below(r.max - r.min + 1);
    }

   private:
    std::mt19937_64 rng_;
};

}  // namespace

SystemDescription generate_synthetic(std::uint64_t seed, std::uint32_t rows, std::uint32_t cols,
                                     std::uint32_t n_cores, std::uint32_t n_processors,
                                     const SyntheticRanges& ranges, const SyntheticNoc& noc) {
    if (rows < 1 || cols < 1) throw CapacityError("grid must have at least one router");
    const std::uint64_t routers = std::uint64_t{rows} * cols;
    if (std::uint64_t{n_cores} + n_processors > routers)
        throw CapacityError(std::to_string(n_cores + std::uint64_t{n_processors}) + " modules exceed " +
                            std::to_string(routers) + " routers of a " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " grid");

    Draw draw(seed);
    SystemDescription sys;
    sys.noc.rows = rows;
    sys.noc.cols = cols;
    sys.noc.flit_width_bits = noc.flit_width_bits;
    sys.noc.routing_latency = noc.routing_latency;
    sys.noc.flow_control_latency = noc.flow_control_latency;
    sys.noc.header_flits = noc.header_flits;
    sys.noc.router_transport_power = noc.router_transport_power;

    std::vector<Position> slots;
    slots.reserve(routers);
    for (std::uint32_t y = 0; y < rows; ++y)
        for (std::uint32_t x = 0; x < cols; ++x) slots.push_back({x, y});
    // Partial Fisher-Yates: the first n_cores + n_processors slots are the draw.
    const std::size_t needed = n_cores + std::size_t{n_processors};
    for (std::size_t i = 0; i < needed; ++i) std::swap(slots[i], slots[i + draw.below(slots.size() - i)]);

    auto profile = [&](Range patterns) {
        TestProfile t;
        t.pattern_count = draw.in(patterns);
        t.stim_flits_per_pattern = draw.in(ranges.stim_flits_per_pattern);
        t.resp_flits_per_pattern = draw.in(ranges.resp_flits_per_pattern);
        t.apply_cycles_per_pattern = draw.in(ranges.apply_cycles_per_pattern);
        t.test_power = draw.in(ranges.test_power);
        if (t.pattern_count > 0 && t.stim_flits_per_pattern + t.resp_flits_per_pattern + t.apply_cycles_per_pattern == 0)
            t.apply_cycles_per_pattern = 1;
        return t;
    };

    for (std::uint32_t i = 0; i < n_cores; ++i) {
        CoreSpec c;
        c.id = i;
        c.name = "core" + std::to_string(i);
        c.position = slots[i];
        c.test = profile(ranges.pattern_count);
        sys.cores.push_back(std::move(c));
    }
    for (std::uint32_t i = 0; i < n_processors; ++i) {
        ProcessorSpec p;
        p.id = n_cores + i;
        p.name = "proc" + std::to_string(p.id);
        p.position = slots[n_cores + i];
        p.gen_cycles_per_pattern = draw.in(ranges.gen_cycles_per_pattern);
        p.bist_power = draw.in(ranges.bist_power);
        p.memory_kb = draw.in(ranges.memory_kb);
        p.self_test = profile(ranges.self_test_pattern_count);
        sys.processors.push_back(std::move(p));
    }

    std::vector<Position> boundary;
    for (std::uint32_t y = 0; y < rows; ++y)
        for (std::uint32_t x = 0; x < cols; ++x)
            if (x == 0 || y == 0 || x + 1 == cols || y + 1 == rows) boundary.push_back({x, y});
    sys.io_ports.push_back({0, boundary[draw.below(boundary.size())], PortDirection::input});
    sys.io_ports.push_back({1, boundary[draw.below(boundary.size())], PortDirection::output});
    return sys;
}

}  // namespace nocplan
