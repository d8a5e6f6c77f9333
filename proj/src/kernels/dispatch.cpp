// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include <atomic>

#include "nocplan/kernels.hpp"

namespace nocplan::kernels {

namespace {

struct Table {
    Isa isa;
    void (*latency)(const LatencyBatch&);
    bool (*intersect)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
    std::uint64_t (*power)(std::span<const std::uint64_t>, std::span<const std::uint64_t>,
                           std::span<const std::uint64_t>, std::uint64_t);
};

constexpr Table kScalar{Isa::scalar, &scalar::packet_latency_batch, &scalar::masks_intersect,
                        &scalar::active_power_at};
#if NOCPLAN_HAVE_AVX2_KERNELS
constexpr Table kAvx2{Isa::avx2, &avx2::packet_latency_batch, &avx2::masks_intersect, &avx2::active_power_at};
#endif

bool cpu_has_avx2() {
#if NOCPLAN_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Table* table_for(Isa isa) {
#if NOCPLAN_HAVE_AVX2_KERNELS
    if (isa == Isa::avx2) return &kAvx2;
#endif
    (void)isa;
    return &kScalar;
}

std::atomic<const Table*>& current() {
    static std::atomic<const Table*> t{table_for(detected_isa())};
    return t;
}

}  // namespace

std::string_view name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
    static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    return isa;
}

Isa active_isa() { return current().load(std::memory_order_acquire)->isa; }

bool force_isa(Isa isa) {
    if (isa == Isa::avx2 && detected_isa() != Isa::avx2) return false;
    current().store(table_for(isa), std::memory_order_release);
    return true;
}

void packet_latency_batch(const LatencyBatch& batch) { current().load(std::memory_order_acquire)->latency(batch); }

bool masks_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return current().load(std::memory_order_acquire)->intersect(a, b);
}

std::uint64_t active_power_at(std::span<const std::uint64_t> start, std::span<const std::uint64_t> end,
                              std::span<const std::uint64_t> power, std::uint64_t t) {
    return current().load(std::memory_order_acquire)->power(start, end, power, t);
}

}  // namespace nocplan::kernels
