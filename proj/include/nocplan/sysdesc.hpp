// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nocplan/common.hpp"
#include "nocplan/fraction.hpp"
#include "nocplan/noc_model.hpp"

namespace nocplan {

/// Per-pattern test profile supplied by the core provider.
struct TestProfile {
    std::uint64_t pattern_count = 0;
    std::uint64_t stim_flits_per_pattern = 0;
    std::uint64_t resp_flits_per_pattern = 0;
    Cycles apply_cycles_per_pattern = 0;
    Power test_power = 0;

    friend bool operator==(const TestProfile&, const TestProfile&) = default;
};

struct CoreSpec {
    ModuleId id = 0;
    std::string name;
    Position position;
    TestProfile test;

    friend bool operator==(const CoreSpec&, const CoreSpec&) = default;
};

/// An embedded processor that can run the software BIST program once its
/// own self-test has finished.
struct ProcessorSpec {
    ModuleId id = 0;
    std::string name;
    Position position;
    Cycles gen_cycles_per_pattern = 10;
    Power bist_power = 0;
    /// Carried and reported; not a scheduling constraint.
    std::uint64_t memory_kb = 0;
    /// pattern_count == 0 means pre-tested: reusable from cycle 0.
    TestProfile self_test;

    friend bool operator==(const ProcessorSpec&, const ProcessorSpec&) = default;
};

/// The processor's self-test viewed as a core under test.
CoreSpec as_cut(const ProcessorSpec& p);

enum class PortDirection { input, output };

struct IoPort {
    PortId id = 0;
    Position position;
    PortDirection direction = PortDirection::input;

    friend bool operator==(const IoPort&, const IoPort&) = default;
};

struct SystemDescription {
    NocConfig noc;
    std::vector<CoreSpec> cores;
    std::vector<ProcessorSpec> processors;
    std::vector<IoPort> io_ports;

    const CoreSpec* find_core(ModuleId id) const;
    const ProcessorSpec* find_processor(ModuleId id) const;
    const IoPort* find_port(PortId id) const;

    friend bool operator==(const SystemDescription&, const SystemDescription&) = default;
};

/// Checks every structural invariant; throws ValidationError naming the field.
void validate(const SystemDescription& sys);

/// Parses and validates a native-format JSON document.
/// Throws SyntaxError for malformed text and ValidationError otherwise;
/// both carry the 1-based line of the offending element.
SystemDescription load_system(std::string_view document);

/// Canonical native-format text (stable key order, 2-space indent, trailing newline).
std::string serialize(const SystemDescription& sys);

/// Σ test power of every core plus every processor self-test.
Power total_test_power(const SystemDescription& sys);

/// floor(fraction × total_test_power(sys)).
Power power_budget(const SystemDescription& sys, const Fraction& fraction);

/// Budget the planner enforces: none when the fraction is absent or ≥ 1.
std::optional<Power> effective_budget(const SystemDescription& sys, const std::optional<Fraction>& fraction);

/// Test priority of a module position; lower sorts first.
struct PriorityKey {
    std::uint32_t hops = 0;
    ModuleId id = 0;

    friend auto operator<=>(const PriorityKey&, const PriorityKey&) = default;
};

/// Minimum Manhattan distance from `cut_position` to any IO port or any
/// processor, paired with `id` as the tie-break.
PriorityKey priority_key(const SystemDescription& sys, Position cut_position, ModuleId id = 0);

struct Range {
    std::uint64_t min = 0;
    std::uint64_t max = 0;
};

/// Uniform ranges for every numeric field the generator draws.
struct SyntheticRanges {
    Range pattern_count{10, 200};
    Range stim_flits_per_pattern{1, 16};
    Range resp_flits_per_pattern{1, 16};
    Range apply_cycles_per_pattern{1, 40};
    Range test_power{5, 60};
    Range gen_cycles_per_pattern{10, 10};
    Range bist_power{5, 20};
    Range memory_kb{4, 64};
    Range self_test_pattern_count{0, 100};
};

struct SyntheticNoc {
    Cycles routing_latency = 2;
    Cycles flow_control_latency = 1;
    std::uint32_t flit_width_bits = 32;
    std::uint32_t header_flits = 1;
    Power router_transport_power = 1;
};

/// Deterministic random instance. Positions are drawn without replacement;
/// one INPUT and one OUTPUT port land on boundary routers. Core ids are
/// 0..n_cores-1, processor ids follow. Throws CapacityError when the
/// modules do not fit on the grid.
SystemDescription generate_synthetic(std::uint64_t seed, std::uint32_t rows, std::uint32_t cols,
                                     std::uint32_t n_cores, std::uint32_t n_processors,
                                     const SyntheticRanges& ranges = {}, const SyntheticNoc& noc = {});

}  // namespace nocplan
