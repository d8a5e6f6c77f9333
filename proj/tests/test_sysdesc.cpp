// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "nocplan/sysdesc.hpp"
#include "test_support.hpp"

using namespace nocplan;

namespace {

const char* kMinimal = R"({
  "format_version": 1,
  "noc": {"rows": 1, "cols": 2, "flit_width_bits": 32, "routing_latency": 2,
          "flow_control_latency": 1, "header_flits": 1, "router_transport_power": 0},
  "cores": [
    {"id": 1, "name": "cut", "position": [1, 0], "pattern_count": 2,
     "stim_flits_per_pattern": 4, "resp_flits_per_pattern": 2,
     "apply_cycles_per_pattern": 10, "test_power": 30}
  ],
  "processors": [],
  "io_ports": [
    {"id": 0, "position": [0, 0], "direction": "INPUT"},
    {"id": 1, "position": [0, 0], "direction": "OUTPUT"}
  ]
})";

std::string patched(const std::string& from, const std::string& to) {
    std::string doc = kMinimal;
    const auto at = doc.find(from);
    REQUIRE(at != std::string::npos);
    return doc.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("minimal document loads") {
    const auto sys = load_system(kMinimal);
    CHECK(sys.cores.size() == 1);
    CHECK(sys.processors.empty());
    CHECK(sys.io_ports.size() == 2);
    CHECK(sys.noc.rows == 1);
    CHECK(sys.noc.cols == 2);
    CHECK(sys.cores[0].position == Position{1, 0});
    CHECK(sys.cores[0].test.pattern_count == 2);
}

TEST_CASE("off-grid position is rejected with field and line") {
    try {
        load_system(patched("\"position\": [1, 0]", "\"position\": [5, 0]"));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "cores[0].position");
        CHECK(std::string(e.what()).find("position out of grid") != std::string::npos);
        CHECK(e.line() == 6);
    }
}

TEST_CASE("duplicate module position is rejected") {
    const auto doc = patched("\"processors\": []",
                             R"("processors": [{"id": 7, "name": "p", "position": [1, 0], "bist_power": 1,
                                  "memory_kb": 4, "self_test": {"pattern_count": 0, "stim_flits_per_pattern": 0,
                                  "resp_flits_per_pattern": 0, "apply_cycles_per_pattern": 0, "test_power": 0}}])");
    try {
        load_system(doc);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "processors[0].position");
        CHECK(std::string(e.what()).find("duplicate position") != std::string::npos);
    }
}

TEST_CASE("duplicate ids across cores and processors") {
    const auto doc = patched("\"processors\": []",
                             R"("processors": [{"id": 1, "name": "p", "position": [0, 0], "bist_power": 1,
                                  "memory_kb": 4, "self_test": {"pattern_count": 0, "stim_flits_per_pattern": 0,
                                  "resp_flits_per_pattern": 0, "apply_cycles_per_pattern": 0, "test_power": 0}}])");
    CHECK_THROWS_WITH_AS(load_system(doc), doctest::Contains("duplicate id"), ValidationError);
}

TEST_CASE("missing port directions") {
    const auto no_out = patched("\"direction\": \"OUTPUT\"", "\"direction\": \"INPUT\"");
    CHECK_THROWS_WITH_AS(load_system(no_out), doctest::Contains("missing OUTPUT port"), ValidationError);
    const auto no_in = patched("\"direction\": \"INPUT\"", "\"direction\": \"OUTPUT\"");
    CHECK_THROWS_WITH_AS(load_system(no_in), doctest::Contains("missing INPUT port"), ValidationError);
}

TEST_CASE("strict schema") {
    SUBCASE("unknown key") {
        const auto doc = patched("\"name\": \"cut\"", "\"name\": \"cut\", \"level\": 2");
        try {
            load_system(doc);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.field() == "cores[0].level");
            CHECK(e.line() == 6);
        }
    }
    SUBCASE("format_version required") {
        const auto doc = patched("\"format_version\": 1,", "");
        CHECK_THROWS_WITH_AS(load_system(doc), doctest::Contains("format_version"), ValidationError);
    }
    SUBCASE("negative number") {
        const auto doc = patched("\"test_power\": 30", "\"test_power\": -3");
        CHECK_THROWS_WITH_AS(load_system(doc), doctest::Contains("cores[0].test_power"), ValidationError);
    }
    SUBCASE("fractional number") {
        const auto doc = patched("\"pattern_count\": 2", "\"pattern_count\": 2.5");
        CHECK_THROWS_AS(load_system(doc), ValidationError);
    }
    SUBCASE("bad direction") {
        const auto doc = patched("\"direction\": \"INPUT\"", "\"direction\": \"BOTH\"");
        CHECK_THROWS_WITH_AS(load_system(doc), doctest::Contains("io_ports[0].direction"), ValidationError);
    }
    SUBCASE("zero flow-control latency") {
        const auto doc = patched("\"flow_control_latency\": 1", "\"flow_control_latency\": 0");
        CHECK_THROWS_WITH_AS(load_system(doc), doctest::Contains("noc.flow_control_latency"), ValidationError);
    }
    SUBCASE("patterns that do nothing") {
        std::string doc = patched("\"stim_flits_per_pattern\": 4", "\"stim_flits_per_pattern\": 0");
        doc = doc.replace(doc.find("\"resp_flits_per_pattern\": 2"), 27, "\"resp_flits_per_pattern\": 0");
        doc = doc.replace(doc.find("\"apply_cycles_per_pattern\": 10"), 30, "\"apply_cycles_per_pattern\": 0");
        CHECK_THROWS_AS(load_system(doc), ValidationError);
    }
}

TEST_CASE("optional fields take their defaults") {
    const auto doc = patched("\"flow_control_latency\": 1, \"header_flits\": 1,", "\"flow_control_latency\": 1,");
    CHECK(load_system(doc).noc.header_flits == 1);
}

TEST_CASE("syntax errors carry a line") {
    std::string doc = kMinimal;
    doc.insert(doc.find("\"processors\""), "}}");
    try {
        load_system(doc);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 10);
    }
}

TEST_CASE("round trip is stable on generated instances") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto sys = testing::random_system(rng, 6, 12);
        const auto text = serialize(sys);
        const auto loaded = load_system(text);
        CHECK(loaded == sys);
        CHECK(serialize(loaded) == text);
    }
}

TEST_CASE("power budget") {
    auto sys = load_system(kMinimal);
    sys.cores.clear();
    sys.cores.push_back({1, "a", {0, 0}, {1, 1, 1, 1, 30}});
    sys.cores.push_back({2, "b", {1, 0}, {1, 1, 1, 1, 50}});
    sys.noc.cols = 3;
    sys.cores.push_back({3, "c", {2, 0}, {1, 1, 1, 1, 20}});

    CHECK(power_budget(sys, Fraction::parse("0.5")) == 50);
    CHECK(power_budget(sys, Fraction::parse("1.0")) == 100);
    CHECK(power_budget(sys, Fraction::parse("0")) == 0);
    CHECK(power_budget(sys, Fraction::parse("0.333")) == 33);

    SUBCASE("processor self-test power counts") {
        sys.processors.push_back({9, "p", {0, 0}, 10, 7, 4, {5, 1, 1, 1, 40}});
        sys.cores.erase(sys.cores.begin());
        CHECK(total_test_power(sys) == 110);
    }
    SUBCASE("effective budget is unconstrained at or above one") {
        CHECK_FALSE(effective_budget(sys, std::nullopt).has_value());
        CHECK_FALSE(effective_budget(sys, Fraction::parse("1")).has_value());
        CHECK_FALSE(effective_budget(sys, Fraction::parse("1.5")).has_value());
        CHECK(effective_budget(sys, Fraction::parse("0.8")) == 80);
    }
}

TEST_CASE("power budget is linear in the fraction") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const auto sys = testing::random_system(rng, 4, 10);
        const Fraction a(rng() % 1000, 1000);
        const Fraction b(rng() % 1000, 1000);
        const auto total = total_test_power(sys);
        const auto sum = power_budget(sys, a + b);
        const auto split = power_budget(sys, a) + power_budget(sys, b);
        // Flooring loses at most one unit per term; exact when nothing is floored.
        CHECK(sum >= split);
        CHECK(sum <= split + 1);
        if ((a.num() * total) % a.den() == 0 && (b.num() * total) % b.den() == 0) CHECK(sum == split);
    }
}

TEST_CASE("priority key") {
    auto sys = load_system(kMinimal);
    sys.noc.cols = 4;
    sys.io_ports = {{0, {0, 0}, PortDirection::input}, {1, {0, 0}, PortDirection::output}};
    sys.processors.push_back({9, "p", {3, 0}, 10, 0, 0, {}});

    CHECK(priority_key(sys, {2, 0}).hops == 1);
    CHECK(priority_key(sys, {0, 0}).hops == 0);
    CHECK(priority_key(sys, {1, 0}, 4) < priority_key(sys, {2, 0}, 7));
    CHECK(PriorityKey{1, 4} < PriorityKey{1, 7});
}

TEST_CASE("priority key bounds") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const auto sys = testing::random_system(rng, 6, 12);
        for (std::uint32_t y = 0; y < sys.noc.rows; ++y) {
            for (std::uint32_t x = 0; x < sys.noc.cols; ++x) {
                const Position p{x, y};
                const auto key = priority_key(sys, p);
                CHECK(key.hops <= (sys.noc.rows - 1) + (sys.noc.cols - 1));
                bool shares = false;
                for (const auto& port : sys.io_ports) shares |= port.position == p;
                for (const auto& proc : sys.processors) shares |= proc.position == p;
                CHECK((key.hops == 0) == shares);
            }
        }
    }
}

TEST_CASE("synthetic generator") {
    SUBCASE("deterministic") {
        const auto a = serialize(generate_synthetic(1, 4, 4, 10, 6));
        const auto b = serialize(generate_synthetic(1, 4, 4, 10, 6));
        CHECK(a == b);
        CHECK(a != serialize(generate_synthetic(2, 4, 4, 10, 6)));
    }
    SUBCASE("full occupancy of a 4x4 grid") {
        const auto sys = generate_synthetic(1, 4, 4, 10, 6);
        CHECK(sys.cores.size() == 10);
        CHECK(sys.processors.size() == 6);
        CHECK(sys.noc.rows == 4);
        CHECK(sys.noc.cols == 4);
        std::set<Position> used;
        for (const auto& c : sys.cores) used.insert(c.position);
        for (const auto& p : sys.processors) used.insert(p.position);
        CHECK(used.size() == 16);
    }
    SUBCASE("capacity") { CHECK_THROWS_AS(generate_synthetic(2, 2, 2, 3, 2), CapacityError); }
    SUBCASE("ports on the boundary and ranges respected") {
        SyntheticRanges r;
        r.pattern_count = {5, 9};
        r.test_power = {3, 3};
        const auto sys = generate_synthetic(42, 5, 6, 12, 3, r);
        for (const auto& port : sys.io_ports) {
            const auto p = port.position;
            CHECK((p.x == 0 || p.y == 0 || p.x == 5 || p.y == 4));
        }
        for (const auto& c : sys.cores) {
            CHECK(c.test.pattern_count >= 5);
            CHECK(c.test.pattern_count <= 9);
            CHECK(c.test.test_power == 3);
        }
    }
    SUBCASE("always passes validation after serialization") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto sys = generate_synthetic(seed, 1 + seed % 5, 2 + seed % 4, 1 + seed % 2, seed % 2);
            CHECK_NOTHROW(load_system(serialize(sys)));
        }
    }
}

TEST_CASE("fraction parsing") {
    CHECK(Fraction::parse("0.5") == Fraction(1, 2));
    CHECK(Fraction::parse("1") == Fraction(1, 1));
    CHECK(Fraction::parse(".25") == Fraction(1, 4));
    CHECK(Fraction::parse("0.30").to_string() == "0.3");
    CHECK(Fraction::parse("2.125").to_string() == "2.125");
    CHECK(Fraction::parse("0").to_string() == "0");
    CHECK(Fraction::parse("0.5") < Fraction::parse("0.8"));
    CHECK(Fraction::parse("0.5").scale_floor(101) == 50);
    CHECK_THROWS_AS(Fraction::parse("-0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Fraction::parse("1e-3"), std::invalid_argument);
    CHECK_THROWS_AS(Fraction::parse("."), std::invalid_argument);
    CHECK_THROWS_AS(Fraction::parse("none"), std::invalid_argument);
}
