// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

// Compiled with -mavx2; only reached through dispatch after a CPU check.

#include <immintrin.h>

#include <cstddef>

#include "nocplan/kernels.hpp"

namespace nocplan::kernels::avx2 {

namespace {

inline __m256i load_u32x4(const std::uint32_t* p) {
    return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

}  // namespace

void packet_latency_batch(const LatencyBatch& b) {
    const std::size_t n = b.out.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i rl = load_u32x4(b.routing_latency.data() + i);
        const __m256i fcl = load_u32x4(b.flow_control_latency.data() + i);
        const __m256i hdr = load_u32x4(b.header_flits.data() + i);
        const __m256i hops = load_u32x4(b.hops.data() + i);
        const __m256i pay = load_u32x4(b.payload_flits.data() + i);

        // 32x32 products only; the sum is congruent to the scalar form mod 2^64.
        __m256i acc = _mm256_add_epi64(_mm256_mul_epu32(rl, hops), rl);
        acc = _mm256_add_epi64(acc, _mm256_mul_epu32(fcl, hops));
        acc = _mm256_add_epi64(acc, _mm256_mul_epu32(fcl, hdr));
        acc = _mm256_add_epi64(acc, _mm256_mul_epu32(fcl, pay));
        acc = _mm256_sub_epi64(acc, fcl);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(b.out.data() + i), acc);
    }
    if (i < n) {
        scalar::packet_latency_batch({b.routing_latency.subspan(i), b.flow_control_latency.subspan(i),
                                      b.header_flits.subspan(i), b.hops.subspan(i), b.payload_flits.subspan(i),
                                      b.out.subspan(i)});
    }
}

bool masks_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
        if (!_mm256_testz_si256(va, vb)) return true;
    }
    for (; i < n; ++i) {
        if (a[i] & b[i]) return true;
    }
    return false;
}

std::uint64_t active_power_at(std::span<const std::uint64_t> start, std::span<const std::uint64_t> end,
                              std::span<const std::uint64_t> power, std::uint64_t t) {
    const std::size_t n = power.size();
    const __m256i vt = _mm256_set1_epi64x(static_cast<long long>(t));
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(start.data() + i));
        const __m256i e = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(end.data() + i));
        const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(power.data() + i));
        const __m256i started = _mm256_cmpgt_epi64(s, vt);  // start > t
        const __m256i running = _mm256_cmpgt_epi64(e, vt);  // end > t
        acc = _mm256_add_epi64(acc, _mm256_and_si256(_mm256_andnot_si256(started, running), p));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    if (i < n) sum += scalar::active_power_at(start.subspan(i), end.subspan(i), power.subspan(i), t);
    return sum;
}

}  // namespace nocplan::kernels::avx2
