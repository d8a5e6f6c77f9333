// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "nocplan/common.hpp"

namespace nocplan {

/// Characterization of a grid NoC with XY routing and wormhole switching.
struct NocConfig {
    std::uint32_t rows = 1;
    std::uint32_t cols = 1;
    std::uint32_t flit_width_bits = 32;
    /// Cycles a router needs to set up a connection for a header flit.
    Cycles routing_latency = 0;
    /// Cycles to move one flit across one link.
    Cycles flow_control_latency = 1;
    std::uint32_t header_flits = 1;
    /// Mean packet power charged at every router a session's packets cross.
    Power router_transport_power = 0;

    bool contains(Position p) const { return p.x < cols && p.y < rows; }
    std::uint32_t router_count() const { return rows * cols; }

    friend bool operator==(const NocConfig&, const NocConfig&) = default;
};

/// Throws ValidationError naming the first out-of-range field.
void validate(const NocConfig& noc);

/// Router sequence from source to destination, both inclusive.
struct Path {
    std::vector<Position> routers;

    std::uint32_t hops() const { return routers.empty() ? 0 : static_cast<std::uint32_t>(routers.size() - 1); }
    friend bool operator==(const Path&, const Path&) = default;
};

/// Directed link between two adjacent routers.
struct Link {
    Position from;
    Position to;

    friend auto operator<=>(const Link&, const Link&) = default;
};

/// Deterministic XY route: all X movement first, then Y. Throws OutOfGridError.
Path xy_path(const NocConfig& noc, Position from, Position to);

/// Wormhole packet latency: the header pays the routing latency at every
/// router on the path (source included) and the flow-control latency on
/// every link; the remaining flits stream behind it one flow-control
/// latency apart.
///
///   latency = RL·(hops + 1) + FCL·(hops + F − 1),  F = header_flits + payload_flits
Cycles packet_latency(const NocConfig& noc, std::uint32_t hops, std::uint64_t payload_flits);

std::set<Link> path_links(const Path& path);

/// router_transport_power × number of routers traversed (endpoints included).
Power transport_power(const NocConfig& noc, const Path& path);

/// Dense bitset over every directed link of a grid, used for fast
/// contention checks. Link index = router index × 4 + direction.
class LinkMask {
   public:
    LinkMask() = default;
    explicit LinkMask(const NocConfig& noc);

    void add(const NocConfig& noc, const Path& path);
    void merge(const LinkMask& other);
    void clear();
    bool intersects(const LinkMask& other) const;
    bool empty() const;
    std::span<const std::uint64_t> words() const { return words_; }

   private:
    std::vector<std::uint64_t> words_;
};

}  // namespace nocplan
