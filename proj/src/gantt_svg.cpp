// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "nocplan/report.hpp"

namespace nocplan {

namespace {

constexpr int kLabelWidth = 120;
constexpr int kChartWidth = 1000;
constexpr int kLaneHeight = 28;
constexpr int kTop = 40;
constexpr int kAxisHeight = 40;

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

using LaneKey = std::pair<EndpointKind, std::uint32_t>;

}  // namespace

std::string gantt_svg(const SystemDescription& sys, const Schedule& sched) {
    std::vector<std::pair<LaneKey, std::string>> lanes;
    std::vector<const IoPort*> ports;
    for (const auto& p : sys.io_ports) ports.push_back(&p);
    std::sort(ports.begin(), ports.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* p : ports) {
        const bool in = p->direction == PortDirection::input;
        lanes.push_back({{in ? EndpointKind::external_in : EndpointKind::external_out, p->id},
                         (in ? "IN " : "OUT ") + std::to_string(p->id)});
    }
    std::vector<const ProcessorSpec*> procs;
    for (const auto& p : sys.processors) procs.push_back(&p);
    std::sort(procs.begin(), procs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* p : procs) lanes.push_back({{EndpointKind::processor, p->id}, p->name});

    std::map<LaneKey, std::size_t> lane_of;
    for (std::size_t i = 0; i < lanes.size(); ++i) lane_of[lanes[i].first] = i;

    const double span = sched.makespan > 0 ? static_cast<double>(sched.makespan) : 1.0;
    auto x_of = [&](Cycles c) { return kLabelWidth + static_cast<double>(c) * kChartWidth / span; };
    const int height = kTop + static_cast<int>(lanes.size()) * kLaneHeight + kAxisHeight;
    const int width = kLabelWidth + kChartWidth + 20;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"monospace\" font-size=\"11\">\n";
    svg << "<text x=\"" << kLabelWidth << "\" y=\"20\" font-size=\"13\">test schedule, makespan " << sched.makespan
        << " cycles</text>\n";

    for (std::size_t i = 0; i < lanes.size(); ++i) {
        const int y = kTop + static_cast<int>(i) * kLaneHeight;
        svg << "<rect x=\"" << kLabelWidth << "\" y=\"" << y << "\" width=\"" << kChartWidth << "\" height=\""
            << kLaneHeight << "\" fill=\"" << (i % 2 ? "#ffffff" : "#f4f4f4") << "\"/>\n";
        svg << "<text x=\"4\" y=\"" << y + kLaneHeight / 2 + 4 << "\">" << escape(lanes[i].second) << "</text>\n";
    }

    auto bar = [&](std::size_t lane, const TestSession& s, const char* fill, const std::string& tag) {
        const int y = kTop + static_cast<int>(lane) * kLaneHeight + 3;
        const double x0 = x_of(s.start);
        const double w = std::max(x_of(s.end) - x0, 0.5);
        svg << "<rect x=\"" << fixed(x0) << "\" y=\"" << y << "\" width=\"" << fixed(w) << "\" height=\""
            << kLaneHeight - 6 << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"0.5\"><title>cut "
            << s.cut_id << tag << " [" << s.start << "," << s.end << ") power " << s.power << "</title></rect>\n";
        if (w > 24)
            svg << "<text x=\"" << fixed(x0 + 3) << "\" y=\"" << y + kLaneHeight / 2 + 1 << "\" fill=\"#ffffff\">"
                << s.cut_id << "</text>\n";
    };

    for (const auto& s : sched.sessions) {
        const char* fill = kPalette[s.cut_id % std::size(kPalette)];
        const LaneKey src{s.source.kind, s.source.ref_id};
        const LaneKey snk{s.sink.kind, s.sink.ref_id};
        if (auto it = lane_of.find(src); it != lane_of.end()) bar(it->second, s, fill, " (source)");
        if (snk != src)
            if (auto it = lane_of.find(snk); it != lane_of.end()) bar(it->second, s, fill, " (sink)");
        // A processor's own self-test occupies its lane as well.
        if (auto it = lane_of.find({EndpointKind::processor, s.cut_id});
            it != lane_of.end() && sys.find_processor(s.cut_id))
            bar(it->second, s, "#999999", " (self-test)");
    }

    const int axis_y = kTop + static_cast<int>(lanes.size()) * kLaneHeight;
    svg << "<line x1=\"" << kLabelWidth << "\" y1=\"" << axis_y << "\" x2=\"" << kLabelWidth + kChartWidth
        << "\" y2=\"" << axis_y << "\" stroke=\"#000000\"/>\n";
    for (int tick = 0; tick <= 10; ++tick) {
        const Cycles c = sched.makespan * static_cast<Cycles>(tick) / 10;
        const double x = x_of(c);
        svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << axis_y << "\" x2=\"" << fixed(x) << "\" y2=\""
            << axis_y + 5 << "\" stroke=\"#000000\"/>\n";
        svg << "<text x=\"" << fixed(x) << "\" y=\"" << axis_y + 18 << "\" text-anchor=\"middle\">" << c
            << "</text>\n";
    }
    svg << "<text x=\"" << kLabelWidth + kChartWidth / 2 << "\" y=\"" << axis_y + 34
        << "\" text-anchor=\"middle\">cycles</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace nocplan
