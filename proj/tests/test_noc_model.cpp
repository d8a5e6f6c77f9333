// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nocplan/noc_model.hpp"
#include "test_support.hpp"

using namespace nocplan;

namespace {

NocConfig grid(std::uint32_t rows, std::uint32_t cols, Cycles rl = 2, Cycles fcl = 1, std::uint32_t header = 1) {
    NocConfig noc;
    noc.rows = rows;
    noc.cols = cols;
    noc.routing_latency = rl;
    noc.flow_control_latency = fcl;
    noc.header_flits = header;
    return noc;
}

}  // namespace

TEST_CASE("xy_path examples") {
    const auto noc = grid(4, 4);
    CHECK(xy_path(noc, {0, 0}, {2, 1}).routers == std::vector<Position>{{0, 0}, {1, 0}, {2, 0}, {2, 1}});
    CHECK(xy_path(noc, {0, 0}, {2, 1}).hops() == 3);
    CHECK(xy_path(noc, {1, 1}, {1, 1}).routers == std::vector<Position>{{1, 1}});
    CHECK(xy_path(noc, {1, 1}, {1, 1}).hops() == 0);
    CHECK(xy_path(noc, {3, 2}, {0, 2}).routers == std::vector<Position>{{3, 2}, {2, 2}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(xy_path(noc, {4, 0}, {0, 0}), OutOfGridError);
    CHECK_THROWS_AS(xy_path(noc, {0, 0}, {0, 4}), OutOfGridError);
}

TEST_CASE("xy_path is minimal and X-first on every pair of an 8x8 grid") {
    const auto noc = grid(8, 8);
    for (std::uint32_t a = 0; a < 64; ++a) {
        for (std::uint32_t b = 0; b < 64; ++b) {
            const Position from{a % 8, a / 8};
            const Position to{b % 8, b / 8};
            const auto path = xy_path(noc, from, to);
            REQUIRE(path.hops() == manhattan(from, to));
            REQUIRE(path.routers.front() == from);
            REQUIRE(path.routers.back() == to);
            bool y_moved = false;
            for (std::size_t i = 1; i < path.routers.size(); ++i) {
                const auto p = path.routers[i - 1];
                const auto q = path.routers[i];
                REQUIRE(manhattan(p, q) == 1);
                if (p.y != q.y) y_moved = true;
                if (p.x != q.x) REQUIRE_FALSE(y_moved);
            }
        }
    }
}

TEST_CASE("packet_latency examples") {
    CHECK(packet_latency(grid(1, 2, 2, 1, 1), 1, 4) == 9);
    CHECK(packet_latency(grid(1, 2, 2, 1, 1), 0, 0) == 2);
    CHECK(packet_latency(grid(1, 2, 5, 2, 1), 3, 9) == 44);
}

TEST_CASE("flit walk reference agrees with the hand examples") {
    CHECK(testing::flit_walk_latency(2, 1, 1, 1, 4) == 9);
    CHECK(testing::flit_walk_latency(2, 1, 1, 0, 0) == 2);
    CHECK(testing::flit_walk_latency(5, 2, 1, 3, 9) == 44);
}

TEST_CASE("closed form equals the flit walk") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const auto rl = rng() % 11;
        const auto fcl = 1 + rng() % 5;
        const auto header = static_cast<std::uint32_t>(1 + rng() % 3);
        const auto hops = static_cast<std::uint32_t>(rng() % 13);
        const auto payload = rng() % 101;
        REQUIRE(packet_latency(grid(1, 1, rl, fcl, header), hops, payload) ==
                testing::flit_walk_latency(rl, fcl, header, hops, payload));
    }
}

TEST_CASE("packet_latency is monotone in every argument") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Cycles rl = rng() % 10;
        const Cycles fcl = 1 + rng() % 4;
        const std::uint32_t header = 1 + rng() % 3;
        const std::uint32_t hops = rng() % 12;
        const std::uint64_t payload = rng() % 100;
        const auto base = packet_latency(grid(1, 1, rl, fcl, header), hops, payload);
        CHECK(packet_latency(grid(1, 1, rl + 1, fcl, header), hops, payload) >= base);
        CHECK(packet_latency(grid(1, 1, rl, fcl + 1, header), hops, payload) >= base);
        CHECK(packet_latency(grid(1, 1, rl, fcl, header + 1), hops, payload) >= base);
        CHECK(packet_latency(grid(1, 1, rl, fcl, header), hops + 1, payload) >= base);
        CHECK(packet_latency(grid(1, 1, rl, fcl, header), hops, payload + 1) >= base);
    }
}

TEST_CASE("path_links") {
    const Path p{{{0, 0}, {1, 0}, {1, 1}}};
    CHECK(path_links(p) == std::set<Link>{{{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}});
    CHECK(path_links(Path{{{2, 2}}}).empty());
    const auto noc = grid(4, 4);
    CHECK(path_links(xy_path(noc, {0, 0}, {3, 0})).size() == 3);
}

TEST_CASE("reverse XY paths never share a directed link") {
    const auto noc = grid(6, 6);
    for (std::uint32_t a = 0; a < 36; ++a) {
        for (std::uint32_t b = 0; b < 36; ++b) {
            if (a == b) continue;
            const Position pa{a % 6, a / 6};
            const Position pb{b % 6, b / 6};
            const auto fwd = path_links(xy_path(noc, pa, pb));
            const auto rev = path_links(xy_path(noc, pb, pa));
            for (const auto& l : fwd) REQUIRE(rev.count(l) == 0);
        }
    }
}

TEST_CASE("transport_power") {
    auto noc = grid(4, 4);
    noc.router_transport_power = 3;
    CHECK(transport_power(noc, xy_path(noc, {0, 0}, {2, 0})) == 9);
    CHECK(transport_power(noc, xy_path(noc, {1, 1}, {1, 1})) == 3);
    noc.router_transport_power = 0;
    CHECK(transport_power(noc, xy_path(noc, {0, 0}, {3, 3})) == 0);
}

TEST_CASE("link masks agree with link sets") {
    std::mt19937_64 rng(99);
    const auto noc = grid(5, 7);
    auto pos = [&] { return Position{static_cast<std::uint32_t>(rng() % 7), static_cast<std::uint32_t>(rng() % 5)}; };
    for (int i = 0; i < 3000; ++i) {
        const auto p1 = xy_path(noc, pos(), pos());
        const auto p2 = xy_path(noc, pos(), pos());
        LinkMask m1(noc), m2(noc);
        m1.add(noc, p1);
        m2.add(noc, p2);
        const auto s1 = path_links(p1);
        const auto s2 = path_links(p2);
        bool shared = false;
        for (const auto& l : s1) shared |= s2.count(l) > 0;
        REQUIRE(m1.intersects(m2) == shared);
        REQUIRE(m1.empty() == s1.empty());
    }
}

TEST_CASE("NocConfig validation") {
    auto noc = grid(2, 2);
    CHECK_NOTHROW(validate(noc));
    noc.header_flits = 0;
    CHECK_THROWS_WITH_AS(validate(noc), doctest::Contains("noc.header_flits"), ValidationError);
    noc = grid(0, 2);
    CHECK_THROWS_AS(validate(noc), ValidationError);
}
