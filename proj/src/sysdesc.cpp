// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "nocplan/sysdesc.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "json_locator.hpp"

namespace nocplan {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

CoreSpec as_cut(const ProcessorSpec& p) { return CoreSpec{p.id, p.name, p.position, p.self_test}; }

const CoreSpec* SystemDescription::find_core(ModuleId id) const {
    auto it = std::find_if(cores.begin(), cores.end(), [&](const CoreSpec& c) { return c.id == id; });
    return it == cores.end() ? nullptr : &*it;
}

const ProcessorSpec* SystemDescription::find_processor(ModuleId id) const {
    auto it = std::find_if(processors.begin(), processors.end(), [&](const ProcessorSpec& p) { return p.id == id; });
    return it == processors.end() ? nullptr : &*it;
}

const IoPort* SystemDescription::find_port(PortId id) const {
    auto it = std::find_if(io_ports.begin(), io_ports.end(), [&](const IoPort& p) { return p.id == id; });
    return it == io_ports.end() ? nullptr : &*it;
}

namespace {

void check_profile(const TestProfile& t, const std::string& field) {
    if (t.pattern_count > 0 && t.stim_flits_per_pattern + t.resp_flits_per_pattern + t.apply_cycles_per_pattern == 0)
        throw ValidationError(field + ".pattern_count", "patterns present but the test moves no flits and applies nothing");
}

}  // namespace

void validate(const SystemDescription& sys) {
    validate(sys.noc);
    std::map<ModuleId, std::string> ids;
    std::map<Position, std::string> positions;

    auto check_module = [&](ModuleId id, Position pos, const std::string& field) {
        if (!sys.noc.contains(pos)) throw ValidationError(field + ".position", "position out of grid");
        if (auto [it, fresh] = ids.emplace(id, field); !fresh)
            throw ValidationError(field + ".id", "duplicate id " + std::to_string(id) + " (also " + it->second + ")");
        if (auto [it, fresh] = positions.emplace(pos, field); !fresh)
            throw ValidationError(field + ".position", "duplicate position " + to_string(pos) + " (also " + it->second + ")");
    };

    for (std::size_t i = 0; i < sys.cores.size(); ++i) {
        const auto field = "cores[" + std::to_string(i) + "]";
        check_module(sys.cores[i].id, sys.cores[i].position, field);
        check_profile(sys.cores[i].test, field);
    }
    for (std::size_t i = 0; i < sys.processors.size(); ++i) {
        const auto field = "processors[" + std::to_string(i) + "]";
        check_module(sys.processors[i].id, sys.processors[i].position, field);
        check_profile(sys.processors[i].self_test, field + ".self_test");
    }

    std::set<PortId> port_ids;
    bool has_in = false;
    bool has_out = false;
    for (std::size_t i = 0; i < sys.io_ports.size(); ++i) {
        const auto field = "io_ports[" + std::to_string(i) + "]";
        const auto& port = sys.io_ports[i];
        if (!sys.noc.contains(port.position)) throw ValidationError(field + ".position", "position out of grid");
        if (!port_ids.insert(port.id).second)
            throw ValidationError(field + ".id", "duplicate io port id " + std::to_string(port.id));
        (port.direction == PortDirection::input ? has_in : has_out) = true;
    }
    if (!has_in) throw ValidationError("io_ports", "missing INPUT port");
    if (!has_out) throw ValidationError("io_ports", "missing OUTPUT port");
}

namespace {

// Strict reader over a parsed document. Every error names the field path.
class Reader {
   public:
    explicit Reader(const detail::JsonLocator& loc) : loc_(loc) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw ValidationError(field, what, loc_.line_of(field));
    }

    void expect_object(const json& j, const std::string& field, std::initializer_list<std::string_view> allowed,
                       std::initializer_list<std::string_view> required) const {
        if (!j.is_object()) fail(field, "expected an object");
        for (const auto& [key, _] : j.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                fail(join(field, key), "unknown key '" + key + "'");
        }
        for (auto key : required) {
            if (!j.contains(key)) fail(field, "missing key '" + std::string(key) + "'");
        }
    }

    std::uint64_t uint(const json& obj, const std::string& field, std::string_view key,
                       std::optional<std::uint64_t> fallback = std::nullopt,
                       std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) const {
        const auto path = join(field, key);
        if (!obj.contains(key)) {
            if (fallback) return *fallback;
            fail(field, "missing key '" + std::string(key) + "'");
        }
        const auto& v = obj.at(std::string(key));
        if (!v.is_number_unsigned()) {
            if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
            fail(path, "expected a non-negative integer");
        }
        const auto value = v.get<std::uint64_t>();
        if (value > max) fail(path, "value " + std::to_string(value) + " out of range");
        return value;
    }

    std::uint32_t uint32(const json& obj, const std::string& field, std::string_view key,
                         std::optional<std::uint64_t> fallback = std::nullopt) const {
        return static_cast<std::uint32_t>(uint(obj, field, key, fallback, std::numeric_limits<std::uint32_t>::max()));
    }

    Position position(const json& obj, const std::string& field) const {
        const auto path = join(field, "position");
        if (!obj.contains("position")) fail(field, "missing key 'position'");
        const auto& v = obj.at("position");
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_number_unsigned())
            fail(path, "expected [x, y] with non-negative integers");
        const auto x = v[0].get<std::uint64_t>();
        const auto y = v[1].get<std::uint64_t>();
        if (x > std::numeric_limits<std::uint32_t>::max() || y > std::numeric_limits<std::uint32_t>::max())
            fail(path, "position out of grid");
        return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
    }

    std::string text(const json& obj, const std::string& field, std::string_view key) const {
        const auto& v = obj.at(std::string(key));
        if (!v.is_string()) fail(join(field, key), "expected a string");
        return v.get<std::string>();
    }

    const json& array(const json& obj, std::string_view key) const {
        const auto& v = obj.at(std::string(key));
        if (!v.is_array()) fail(std::string(key), "expected an array");
        return v;
    }

    static std::string join(const std::string& field, std::string_view key) {
        return field.empty() ? std::string(key) : field + "." + std::string(key);
    }

   private:
    const detail::JsonLocator& loc_;
};

const std::initializer_list<std::string_view> kProfileKeys = {
    "pattern_count", "stim_flits_per_pattern", "resp_flits_per_pattern", "apply_cycles_per_pattern", "test_power"};

TestProfile read_profile(const Reader& r, const json& j, const std::string& field) {
    TestProfile t;
    t.pattern_count = r.uint(j, field, "pattern_count");
    t.stim_flits_per_pattern = r.uint(j, field, "stim_flits_per_pattern");
    t.resp_flits_per_pattern = r.uint(j, field, "resp_flits_per_pattern");
    t.apply_cycles_per_pattern = r.uint(j, field, "apply_cycles_per_pattern");
    t.test_power = r.uint(j, field, "test_power");
    return t;
}

SystemDescription read_system(const json& doc, const Reader& r) {
    r.expect_object(doc, "", {"format_version", "noc", "cores", "processors", "io_ports"},
                    {"format_version", "noc", "cores", "processors", "io_ports"});
    if (r.uint(doc, "", "format_version") != 1) r.fail("format_version", "unsupported format_version (expected 1)");

    SystemDescription sys;
    const auto& n = doc.at("noc");
    r.expect_object(n, "noc",
                    {"rows", "cols", "flit_width_bits", "routing_latency", "flow_control_latency", "header_flits",
                     "router_transport_power"},
                    {"rows", "cols", "flit_width_bits", "routing_latency", "flow_control_latency",
                     "router_transport_power"});
    sys.noc.rows = r.uint32(n, "noc", "rows");
    sys.noc.cols = r.uint32(n, "noc", "cols");
    sys.noc.flit_width_bits = r.uint32(n, "noc", "flit_width_bits");
    sys.noc.routing_latency = r.uint(n, "noc", "routing_latency");
    sys.noc.flow_control_latency = r.uint(n, "noc", "flow_control_latency");
    sys.noc.header_flits = r.uint32(n, "noc", "header_flits", 1);
    sys.noc.router_transport_power = r.uint(n, "noc", "router_transport_power");
    if (std::uint64_t{sys.noc.rows} * sys.noc.cols > std::numeric_limits<std::uint32_t>::max() / 4)
        r.fail("noc", "grid too large");

    const auto& cores = r.array(doc, "cores");
    for (std::size_t i = 0; i < cores.size(); ++i) {
        const auto field = "cores[" + std::to_string(i) + "]";
        const auto& c = cores[i];
        r.expect_object(c, field,
                        {"id", "name", "position", "pattern_count", "stim_flits_per_pattern", "resp_flits_per_pattern",
                         "apply_cycles_per_pattern", "test_power"},
                        {"id", "name", "position"});
        CoreSpec core;
        core.id = r.uint32(c, field, "id");
        core.name = r.text(c, field, "name");
        core.position = r.position(c, field);
        core.test = read_profile(r, c, field);
        sys.cores.push_back(std::move(core));
    }

    const auto& procs = r.array(doc, "processors");
    for (std::size_t i = 0; i < procs.size(); ++i) {
        const auto field = "processors[" + std::to_string(i) + "]";
        const auto& p = procs[i];
        r.expect_object(p, field,
                        {"id", "name", "position", "gen_cycles_per_pattern", "bist_power", "memory_kb", "self_test"},
                        {"id", "name", "position", "bist_power", "memory_kb", "self_test"});
        ProcessorSpec proc;
        proc.id = r.uint32(p, field, "id");
        proc.name = r.text(p, field, "name");
        proc.position = r.position(p, field);
        proc.gen_cycles_per_pattern = r.uint(p, field, "gen_cycles_per_pattern", 10);
        proc.bist_power = r.uint(p, field, "bist_power");
        proc.memory_kb = r.uint(p, field, "memory_kb");
        const auto st_field = field + ".self_test";
        r.expect_object(p.at("self_test"), st_field, kProfileKeys, kProfileKeys);
        proc.self_test = read_profile(r, p.at("self_test"), st_field);
        sys.processors.push_back(std::move(proc));
    }

    const auto& ports = r.array(doc, "io_ports");
    for (std::size_t i = 0; i < ports.size(); ++i) {
        const auto field = "io_ports[" + std::to_string(i) + "]";
        const auto& p = ports[i];
        r.expect_object(p, field, {"id", "position", "direction"}, {"id", "position", "direction"});
        IoPort port;
        port.id = r.uint32(p, field, "id");
        port.position = r.position(p, field);
        const auto dir = r.text(p, field, "direction");
        if (dir == "INPUT")
            port.direction = PortDirection::input;
        else if (dir == "OUTPUT")
            port.direction = PortDirection::output;
        else
            r.fail(field + ".direction", "expected INPUT or OUTPUT, got '" + dir + "'");
        sys.io_ports.push_back(port);
    }
    return sys;
}

ordered_json profile_json(const TestProfile& t) {
    ordered_json j;
    j["pattern_count"] = t.pattern_count;
    j["stim_flits_per_pattern"] = t.stim_flits_per_pattern;
    j["resp_flits_per_pattern"] = t.resp_flits_per_pattern;
    j["apply_cycles_per_pattern"] = t.apply_cycles_per_pattern;
    j["test_power"] = t.test_power;
    return j;
}

ordered_json position_json(Position p) { return ordered_json::array({p.x, p.y}); }

}  // namespace

SystemDescription load_system(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points one past the offending character.
        const std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
        throw SyntaxError(detail::line_at(document, pos), e.what());
    }
    const detail::JsonLocator locator(document);
    const Reader reader(locator);
    auto sys = read_system(doc, reader);
    try {
        validate(sys);
    } catch (const ValidationError& e) {
        if (e.line() != 0) throw;
        const std::string what = e.what();
        throw ValidationError(e.field(), what.substr(e.field().size() + 2), locator.line_of(e.field()));
    }
    return sys;
}

std::string serialize(const SystemDescription& sys) {
    ordered_json doc;
    doc["format_version"] = 1;
    auto& n = doc["noc"];
    n["rows"] = sys.noc.rows;
    n["cols"] = sys.noc.cols;
    n["flit_width_bits"] = sys.noc.flit_width_bits;
    n["routing_latency"] = sys.noc.routing_latency;
    n["flow_control_latency"] = sys.noc.flow_control_latency;
    n["header_flits"] = sys.noc.header_flits;
    n["router_transport_power"] = sys.noc.router_transport_power;

    doc["cores"] = ordered_json::array();
    for (const auto& c : sys.cores) {
        ordered_json j;
        j["id"] = c.id;
        j["name"] = c.name;
        j["position"] = position_json(c.position);
        const auto profile = profile_json(c.test);
        for (const auto& [k, v] : profile.items()) j[k] = v;
        doc["cores"].push_back(std::move(j));
    }
    doc["processors"] = ordered_json::array();
    for (const auto& p : sys.processors) {
        ordered_json j;
        j["id"] = p.id;
        j["name"] = p.name;
        j["position"] = position_json(p.position);
        j["gen_cycles_per_pattern"] = p.gen_cycles_per_pattern;
        j["bist_power"] = p.bist_power;
        j["memory_kb"] = p.memory_kb;
        j["self_test"] = profile_json(p.self_test);
        doc["processors"].push_back(std::move(j));
    }
    doc["io_ports"] = ordered_json::array();
    for (const auto& p : sys.io_ports) {
        ordered_json j;
        j["id"] = p.id;
        j["position"] = position_json(p.position);
        j["direction"] = p.direction == PortDirection::input ? "INPUT" : "OUTPUT";
        doc["io_ports"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

Power total_test_power(const SystemDescription& sys) {
    Power sum = 0;
    for (const auto& c : sys.cores) sum += c.test.test_power;
    for (const auto& p : sys.processors) sum += p.self_test.test_power;
    return sum;
}

Power power_budget(const SystemDescription& sys, const Fraction& fraction) {
    return fraction.scale_floor(total_test_power(sys));
}

std::optional<Power> effective_budget(const SystemDescription& sys, const std::optional<Fraction>& fraction) {
    if (!fraction || fraction->at_least_one()) return std::nullopt;
    return power_budget(sys, *fraction);
}

PriorityKey priority_key(const SystemDescription& sys, Position cut_position, ModuleId id) {
    auto best = std::numeric_limits<std::uint32_t>::max();
    for (const auto& port : sys.io_ports) best = std::min(best, manhattan(cut_position, port.position));
    for (const auto& proc : sys.processors) best = std::min(best, manhattan(cut_position, proc.position));
    return {best, id};
}

}  // namespace nocplan
