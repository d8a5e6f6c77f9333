// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

// Data-parallel inner loops of the planner. Each kernel has a portable
// scalar reference in `kernels::scalar` and, on x86-64, an AVX2 variant in
// `kernels::avx2`. The free functions in `kernels` dispatch to the best
// variant the running CPU supports; tests compare the variants directly.

#include <cstdint>
#include <span>
#include <string_view>

namespace nocplan::kernels {

enum class Isa { scalar, avx2 };

std::string_view name(Isa isa);

/// Best instruction set this binary can use on this CPU.
Isa detected_isa();
/// Variant currently used by the dispatching entry points.
Isa active_isa();
/// Pins dispatch to `isa`; returns false (and changes nothing) when the CPU
/// or the build does not support it.
bool force_isa(Isa isa);

/// Structure-of-arrays batch of wormhole latency queries. All input spans
/// must have the same length as `out`; header entries must be ≥ 1.
struct LatencyBatch {
    std::span<const std::uint32_t> routing_latency;
    std::span<const std::uint32_t> flow_control_latency;
    std::span<const std::uint32_t> header_flits;
    std::span<const std::uint32_t> hops;
    std::span<const std::uint32_t> payload_flits;
    std::span<std::uint64_t> out;
};

/// out[i] = RL·(hops+1) + FCL·(hops + header + payload − 1), mod 2^64.
void packet_latency_batch(const LatencyBatch& batch);

/// True iff the two bitsets share a set bit. Spans must be equally long.
bool masks_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Σ power[i] over intervals with start[i] ≤ t < end[i]. Values must be
/// below 2^63.
std::uint64_t active_power_at(std::span<const std::uint64_t> start, std::span<const std::uint64_t> end,
                              std::span<const std::uint64_t> power, std::uint64_t t);

namespace scalar {
void packet_latency_batch(const LatencyBatch& batch);
bool masks_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::uint64_t active_power_at(std::span<const std::uint64_t> start, std::span<const std::uint64_t> end,
                              std::span<const std::uint64_t> power, std::uint64_t t);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NOCPLAN_HAVE_AVX2_KERNELS 1
namespace avx2 {
void packet_latency_batch(const LatencyBatch& batch);
bool masks_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::uint64_t active_power_at(std::span<const std::uint64_t> start, std::span<const std::uint64_t> end,
                              std::span<const std::uint64_t> power, std::uint64_t t);
}  // namespace avx2
#else
#define NOCPLAN_HAVE_AVX2_KERNELS 0
#endif

}  // namespace nocplan::kernels
