// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nocplan/oracle.hpp"
#include "nocplan/report.hpp"
#include "nocplan/scheduler.hpp"
#include "nocplan/sysdesc.hpp"

namespace nocplan::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << text;
    if (!f) throw IoError("failed writing '" + path + "'");
}

std::optional<Fraction> parse_fraction(const std::string& text) {
    if (text == "none") return std::nullopt;
    try {
        return Fraction::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad power fraction: ") + e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) parts.push_back(cur);
    return parts;
}

std::size_t parse_count(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("expected a non-negative integer, got '" + s + "'");
    return std::stoull(s);
}

// "0..6" or "0,2,4,6"
std::vector<std::size_t> parse_counts(const std::string& text) {
    std::vector<std::size_t> counts;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = parse_count(text.substr(0, dots));
        const auto hi = parse_count(text.substr(dots + 2));
        if (lo > hi) throw UsageError("empty processor range '" + text + "'");
        for (auto k = lo; k <= hi; ++k) counts.push_back(k);
        return counts;
    }
    for (const auto& part : split(text, ',')) counts.push_back(parse_count(part));
    if (counts.empty()) throw UsageError("empty processor list");
    return counts;
}

struct PlanFlags {
    std::string path;
    std::string processors;
    std::string power_fraction = "none";
    bool no_exclusive_links = false;
    bool processor_last = false;
    bool dynamic_priority = false;

    void add(CLI::App* cmd) {
        cmd->add_option("system", path, "System description (JSON)")->required();
        cmd->add_option("--processors", processors, "Reuse only the first k processors (by id); default all");
        cmd->add_option("--power-fraction", power_fraction,
                        "Power budget as a ratio of total test power (0.5 = 50%), or 'none'");
        cmd->add_flag("--no-exclusive-links", no_exclusive_links, "Let concurrent sessions share NoC links");
        cmd->add_flag("--processor-last", processor_last, "Order processor self-tests by position like cores");
        cmd->add_flag("--dynamic-priority", dynamic_priority, "Not supported");
    }

    PlanOptions options() const {
        if (dynamic_priority) throw UsageError("--dynamic-priority is not supported");
        PlanOptions opts;
        opts.power_fraction = parse_fraction(power_fraction);
        if (!processors.empty()) opts.processors_reused = parse_count(processors);
        opts.exclusive_links = !no_exclusive_links;
        opts.processor_first = !processor_last;
        return opts;
    }
};

void check_processor_count(const SystemDescription& sys, const PlanOptions& opts) {
    if (opts.processors_reused && *opts.processors_reused > sys.processors.size())
        throw UsageError("--processors " + std::to_string(*opts.processors_reused) + " exceeds the " +
                         std::to_string(sys.processors.size()) + " processors in the system");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Test planner for NoC-based systems-on-chip that reuse embedded processors as test sources/sinks",
                 "nocplan"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto* validate_cmd = app.add_subcommand("validate", "Load and validate a system description");
    std::string validate_path;
    validate_cmd->add_option("system", validate_path, "System description (JSON)")->required();

    auto* plan_cmd = app.add_subcommand("plan", "Schedule every test and report the makespan");
    PlanFlags plan_flags;
    plan_flags.add(plan_cmd);
    std::string plan_out;
    std::string plan_gantt;
    plan_cmd->add_option("--out", plan_out, "Write the schedule CSV here ('-' for stdout)");
    plan_cmd->add_option("--gantt", plan_gantt, "Write an SVG Gantt chart here");

    auto* sweep_cmd = app.add_subcommand("sweep", "Plan over processor counts x power fractions");
    std::string sweep_path;
    std::string sweep_processors;
    std::string sweep_fractions = "none";
    std::string sweep_out = "-";
    bool sweep_shared_links = false;
    sweep_cmd->add_option("system", sweep_path, "System description (JSON)")->required();
    sweep_cmd->add_option("--processors", sweep_processors, "Processor counts: 'lo..hi' or a comma list")->required();
    sweep_cmd->add_option("--power-fractions", sweep_fractions, "Comma list of ratios and/or 'none'");
    sweep_cmd->add_option("--out", sweep_out, "Write the sweep CSV here ('-' for stdout)");
    sweep_cmd->add_flag("--no-exclusive-links", sweep_shared_links, "Let concurrent sessions share NoC links");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded synthetic system description");
    std::uint64_t gen_seed = 1;
    std::string gen_grid = "4x4";
    std::uint32_t gen_cores = 10;
    std::uint32_t gen_procs = 0;
    std::string gen_out = "-";
    SyntheticRanges ranges;
    SyntheticNoc gen_noc;
    gen_cmd->add_option("--seed", gen_seed, "RNG seed");
    gen_cmd->add_option("--grid", gen_grid, "Grid as ROWSxCOLS");
    gen_cmd->add_option("--cores", gen_cores, "Number of cores");
    gen_cmd->add_option("--processors", gen_procs, "Number of processors");
    gen_cmd->add_option("--out", gen_out, "Output file ('-' for stdout)");
    gen_cmd->add_option("--router-power", gen_noc.router_transport_power, "Transport power per router");
    gen_cmd->add_option("--self-test-max", ranges.self_test_pattern_count.max, "Max processor self-test patterns");

    auto* cmp_cmd = app.add_subcommand("compare", "Compare the greedy plan with the exhaustive optimum");
    PlanFlags cmp_flags;
    cmp_flags.add(cmp_cmd);
    OracleLimits limits;
    std::string cmp_out;
    cmp_cmd->add_option("--max-modules", limits.max_modules, "Refuse instances with more modules to test");
    cmp_cmd->add_option("--max-nodes", limits.max_nodes, "Search-node budget");
    cmp_cmd->add_option("--out", cmp_out, "Write the optimal schedule CSV here ('-' for stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (validate_cmd->parsed()) {
            const auto sys = load_system(read_file(validate_path));
            out << "valid: " << sys.cores.size() + sys.processors.size() << " modules (" << sys.cores.size()
                << " cores, " << sys.processors.size() << " processors), " << sys.io_ports.size()
                << " io ports, grid " << sys.noc.rows << "x" << sys.noc.cols << "\n";
            return ok;
        }
        if (plan_cmd->parsed()) {
            const auto sys = load_system(read_file(plan_flags.path));
            const auto opts = plan_flags.options();
            check_processor_count(sys, opts);
            const auto sched = plan(sys, opts);
            if (!plan_out.empty()) write_output(plan_out, to_csv(sched), out);
            if (!plan_gantt.empty()) write_output(plan_gantt, gantt_svg(sys, sched), out);
            out << "makespan=" << sched.makespan << " peak_power=" << peak_power(sched) << "\n";
            return ok;
        }
        if (sweep_cmd->parsed()) {
            const auto sys = load_system(read_file(sweep_path));
            SweepSpec spec;
            spec.processor_counts = parse_counts(sweep_processors);
            for (const auto& f : split(sweep_fractions, ',')) spec.power_fractions.push_back(parse_fraction(f));
            if (spec.power_fractions.empty()) throw UsageError("empty power fraction list");
            for (auto k : spec.processor_counts) {
                PlanOptions o;
                o.processors_reused = k;
                check_processor_count(sys, o);
            }
            spec.exclusive_links = !sweep_shared_links;
            write_output(sweep_out, sweep_csv(run_sweep(sys, spec)), out);
            return ok;
        }
        if (gen_cmd->parsed()) {
            const auto x = gen_grid.find('x');
            if (x == std::string::npos) throw UsageError("--grid must look like 4x4");
            const auto rows = parse_count(gen_grid.substr(0, x));
            const auto cols = parse_count(gen_grid.substr(x + 1));
            if (rows == 0 || cols == 0 || rows > 1024 || cols > 1024) throw UsageError("--grid out of range");
            const auto sys = generate_synthetic(gen_seed, static_cast<std::uint32_t>(rows),
                                                static_cast<std::uint32_t>(cols), gen_cores, gen_procs, ranges, gen_noc);
            write_output(gen_out, serialize(sys), out);
            return ok;
        }
        if (cmp_cmd->parsed()) {
            const auto sys = load_system(read_file(cmp_flags.path));
            const auto opts = cmp_flags.options();
            check_processor_count(sys, opts);
            const auto c = compare(sys, opts, limits);
            if (!cmp_out.empty()) write_output(cmp_out, to_csv(c.optimal, c.exact), out);
            char gap[32];
            std::snprintf(gap, sizeof gap, "%.6f", c.gap());
            out << "greedy=" << c.greedy_makespan << " optimal=" << c.optimal_makespan << " gap=" << gap
                << " exact=" << (c.exact ? "true" : "false") << "\n";
            return ok;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return infeasible;
    } catch (const Error& e) {  // syntax, validation, capacity, too-large
        err << "error: " << e.what() << "\n";
        return validation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace nocplan::cli
