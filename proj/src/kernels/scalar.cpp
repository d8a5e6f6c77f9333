// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include <cstddef>

#include "nocplan/kernels.hpp"

namespace nocplan::kernels::scalar {

void packet_latency_batch(const LatencyBatch& b) {
    const std::size_t n = b.out.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t rl = b.routing_latency[i];
        const std::uint64_t fcl = b.flow_control_latency[i];
        const std::uint64_t hops = b.hops[i];
        const std::uint64_t flits = std::uint64_t{b.header_flits[i]} + b.payload_flits[i];
        b.out[i] = rl * (hops + 1) + fcl * (hops + flits - 1);
    }
}

bool masks_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & b[i]) return true;
    }
    return false;
}

std::uint64_t active_power_at(std::span<const std::uint64_t> start, std::span<const std::uint64_t> end,
                              std::span<const std::uint64_t> power, std::uint64_t t) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < power.size(); ++i) {
        if (start[i] <= t && t < end[i]) sum += power[i];
    }
    return sum;
}

}  // namespace nocplan::kernels::scalar
