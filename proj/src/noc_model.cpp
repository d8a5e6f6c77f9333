// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "nocplan/noc_model.hpp"

#include <algorithm>

#include "nocplan/kernels.hpp"

namespace nocplan {

std::string to_string(Position p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

void validate(const NocConfig& noc) {
    if (noc.rows < 1) throw ValidationError("noc.rows", "must be >= 1");
    if (noc.cols < 1) throw ValidationError("noc.cols", "must be >= 1");
    if (noc.flit_width_bits < 1) throw ValidationError("noc.flit_width_bits", "must be >= 1");
    if (noc.flow_control_latency < 1) throw ValidationError("noc.flow_control_latency", "must be >= 1");
    if (noc.header_flits < 1) throw ValidationError("noc.header_flits", "must be >= 1");
}

Path xy_path(const NocConfig& noc, Position from, Position to) {
    if (!noc.contains(from)) throw OutOfGridError("xy_path: source " + to_string(from) + " outside grid");
    if (!noc.contains(to)) throw OutOfGridError("xy_path: destination " + to_string(to) + " outside grid");
    Path path;
    path.routers.reserve(manhattan(from, to) + 1);
    Position cur = from;
    path.routers.push_back(cur);
    while (cur.x != to.x) {
        cur.x = cur.x < to.x ? cur.x + 1 : cur.x - 1;
        path.routers.push_back(cur);
    }
    while (cur.y != to.y) {
        cur.y = cur.y < to.y ? cur.y + 1 : cur.y - 1;
        path.routers.push_back(cur);
    }
    return path;
}

Cycles packet_latency(const NocConfig& noc, std::uint32_t hops, std::uint64_t payload_flits) {
    const Cycles flits = noc.header_flits + payload_flits;
    return noc.routing_latency * (Cycles{hops} + 1) + noc.flow_control_latency * (hops + flits - 1);
}

std::set<Link> path_links(const Path& path) {
    std::set<Link> links;
    for (std::size_t i = 1; i < path.routers.size(); ++i) links.insert({path.routers[i - 1], path.routers[i]});
    return links;
}

Power transport_power(const NocConfig& noc, const Path& path) {
    return noc.router_transport_power * path.routers.size();
}

namespace {

// 0: +x, 1: -x, 2: +y, 3: -y
std::size_t link_index(const NocConfig& noc, Position from, Position to) {
    const std::size_t router = std::size_t{from.y} * noc.cols + from.x;
    std::size_t dir = 0;
    if (to.x > from.x)
        dir = 0;
    else if (to.x < from.x)
        dir = 1;
    else if (to.y > from.y)
        dir = 2;
    else
        dir = 3;
    return router * 4 + dir;
}

}  // namespace

LinkMask::LinkMask(const NocConfig& noc) : words_((std::size_t{noc.router_count()} * 4 + 63) / 64, 0) {}

void LinkMask::add(const NocConfig& noc, const Path& path) {
    for (std::size_t i = 1; i < path.routers.size(); ++i) {
        const auto bit = link_index(noc, path.routers[i - 1], path.routers[i]);
        words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
}

void LinkMask::merge(const LinkMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

void LinkMask::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool LinkMask::intersects(const LinkMask& other) const { return kernels::masks_intersect(words_, other.words_); }

bool LinkMask::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

}  // namespace nocplan
