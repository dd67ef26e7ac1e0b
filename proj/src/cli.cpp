#include "singlat/cli.hpp"

#include "singlat/chi.hpp"
#include "singlat/cycle.hpp"
#include "singlat/graph.hpp"
#include "singlat/laufer.hpp"
#include "singlat/path.hpp"
#include "singlat/report.hpp"
#include "singlat/splice.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace singlat {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string input;
    std::string format = "text";
    std::string vertex;
    std::vector<std::string> fixes;
    std::string target;
    std::string cap;
    std::string attach;
    std::string cycle;
    bool equations = false;
};

ResolutionGraph load_graph(const std::string& input, std::istream& in) {
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(input, std::ios::binary);
        if (!file) throw Error("cannot read '" + input + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    return parse_graph(text);
}

PathOptions path_options() {
    PathOptions opts;
    if (const char* env = std::getenv("SINGLAT_STATE_LIMIT")) {
        try {
            std::size_t used = 0;
            const auto limit = std::stoull(env, &used);
            if (used != std::string(env).size() || limit == 0) throw std::invalid_argument("junk");
            opts.state_limit = limit;
        } catch (const std::exception&) {
            throw UsageError("SINGLAT_STATE_LIMIT must be a positive integer");
        }
    }
    return opts;
}

/// zmin | zk | literal
Cycle named_cycle(const Lattice& lat, const std::string& spec) {
    if (spec == "zmin") return artin_cycle(lat).cycle;
    if (spec == "zk") return lat.canonical_cycle();
    return lat.cycle(spec);
}

std::vector<CoefficientConstraint> parse_fixes(const std::vector<std::string>& fixes) {
    std::vector<CoefficientConstraint> out;
    for (const auto& f : fixes) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw UsageError("--fix expects ID=N, got '" + f + "'");
        CoefficientConstraint c;
        c.vertex = f.substr(0, eq);
        const auto value = parse_rational(f.substr(eq + 1));
        if (!is_integer(value)) throw UsageError("--fix value must be an integer: '" + f + "'");
        c.value = to_long(value);
        out.push_back(std::move(c));
    }
    return out;
}

void emit(const ResolutionGraph& g, const Settings& s, const Json& j, std::ostream& out) {
    if (s.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << render_text(g, j);
    }
}

bool dot_allowed(const std::string& command) {
    return command == "validate" || command == "report" || command == "zmin" || command == "zk" ||
           command == "dual" || command == "splice";
}

int execute(const std::string& command, const Settings& s, std::istream& in, std::ostream& out) {
    if (s.format == "dot" && !dot_allowed(command))
        throw UsageError("--format dot is available for graph and splice outputs only");
    const auto graph = load_graph(s.input, in);
    const Lattice lat(graph);
    const auto& g = lat.graph();

    auto dot_cycle = [&]() -> std::optional<Cycle> {
        if (s.cycle.empty()) return std::nullopt;
        return named_cycle(lat, s.cycle);
    };

    if (command == "validate") {
        if (s.format == "dot") {
            out << graph_dot(g, dot_cycle());
            return 0;
        }
        const auto& d = lat.definiteness();
        const auto minimal = is_minimal_good(g);
        Json j;
        j["vertices"] = g.size();
        j["edges"] = g.edges().size();
        j["det_neg_m"] = to_json(d.det_neg_m);
        j["negative_definite"] = d.negative_definite;
        j["negative_semidefinite"] = d.negative_semidefinite;
        j["minimal"] = minimal.minimal;
        j["contractible"] = minimal.contractible;
        emit(g, s, j, out);
        return 0;
    }

    if (command == "invariants") {
        lat.require_negative_definite();
        const auto chi_min = min_chi(lat);
        Json j;
        j["det_neg_m"] = to_json(lat.definiteness().det_neg_m);
        j["negative_definite"] = lat.negative_definite();
        j["numerically_gorenstein"] = is_numerically_gorenstein(lat);
        j["z_min"] = to_json(g, artin_cycle(lat).cycle);
        j["z_k"] = to_json(g, lat.canonical_cycle());
        j["min_chi"] = to_json(chi_min.min_chi);
        j["min_chi_witness"] = to_json(g, chi_min.minimizer);
        j["arithmetic_genus"] = to_json(Integer(1 - chi_min.min_chi));
        j["pg_lower_bound"] = to_json(Integer(1 - chi_min.min_chi));
        emit(g, s, j, out);
        return 0;
    }

    if (command == "zmin") {
        const auto artin = artin_cycle(lat);
        if (s.format == "dot") {
            out << graph_dot(g, artin.cycle);
            return 0;
        }
        Json j;
        j["z_min"] = to_json(g, artin.cycle);
        j["sequence"] = to_json(g, artin.sequence);
        j["cost"] = artin.sequence.cost;
        j["simple_jumps"] = artin.sequence.simple_jumps();
        emit(g, s, j, out);
        return 0;
    }

    if (command == "zk") {
        const auto& zk = lat.canonical_cycle();
        if (s.format == "dot") {
            out << graph_dot(g, zk);
            return 0;
        }
        Json j;
        j["z_k"] = to_json(g, zk);
        j["numerically_gorenstein"] = zk.is_integral();
        emit(g, s, j, out);
        return 0;
    }

    if (command == "dual") {
        const auto dual = dual_cycle(lat, s.vertex);
        if (s.format == "dot") {
            out << graph_dot(g, dual);
            return 0;
        }
        Json j;
        j["vertex"] = s.vertex;
        j["dual"] = to_json(g, dual);
        emit(g, s, j, out);
        return 0;
    }

    if (command == "minchi") {
        const auto r = min_chi(lat);
        Json j;
        j["min_chi"] = to_json(r.min_chi);
        j["min_chi_witness"] = to_json(g, r.minimizer);
        j["arithmetic_genus"] = to_json(Integer(1 - r.min_chi));
        j["pg_lower_bound"] = to_json(Integer(1 - r.min_chi));
        j["pg_lower_bound_note"] = "valid when p_g > 0";
        j["candidates_scanned"] = r.candidates_scanned;
        emit(g, s, j, out);
        return 0;
    }

    if (command == "path") {
        const auto opts = path_options();
        Json j;
        if (!s.target.empty()) {
            const auto target = named_cycle(lat, s.target);
            j["target"] = to_json(g, target);
            j["path"] = to_json(g, path_value(lat, target, opts));
        } else {
            std::optional<Cycle> cap;
            if (!s.cap.empty()) cap = lat.cycle(s.cap);
            j["target"] = "gamma";
            j["path"] = to_json(g, path_gamma(lat, cap, opts));
        }
        emit(g, s, j, out);
        return 0;
    }

    if (command == "antinef") {
        const auto constraints = parse_fixes(s.fixes);
        const auto cycles = enumerate_antinef(lat, constraints);
        Json fixed = Json::object();
        for (const auto& c : constraints) fixed[c.vertex] = c.value;
        Json list = Json::array();
        for (const auto& c : cycles) list.push_back(to_json(g, c));
        Json j;
        j["fixed"] = std::move(fixed);
        j["count"] = cycles.size();
        j["cycles"] = std::move(list);
        emit(g, s, j, out);
        return 0;
    }

    if (command == "splice") {
        const auto sd = splice_diagram(g);
        if (s.format == "dot") {
            out << splice_dot(sd);
            return 0;
        }
        emit(g, s, to_json(sd, s.equations), out);
        return 0;
    }

    if (command == "check-kodaira") {
        const auto ext = extend_with_minus_one(g, s.attach);
        const auto d = definiteness(ext);
        Json j;
        j["attach"] = s.attach;
        j["new_vertex"] = ext.vertex(ext.size() - 1).id;
        j["negative_definite"] = d.negative_definite;
        j["negative_semidefinite"] = d.negative_semidefinite;
        emit(g, s, j, out);
        return 0;
    }

    if (command == "report") {
        if (s.format == "dot") {
            out << graph_dot(g, dot_cycle());
            return 0;
        }
        ReportOptions opts;
        opts.path = path_options();
        if (!s.cap.empty()) opts.cap = lat.cycle(s.cap);
        if (!s.attach.empty()) opts.attach = s.attach;
        emit(g, s, invariant_report(lat, opts), out);
        return 0;
    }

    throw UsageError("unknown subcommand '" + command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial invariants of resolution graphs of normal surface singularities", "singlat"};
    app.require_subcommand(1);
    Settings s;

    auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input,-i", s.input, "graph file, or - for stdin")->required();
        sub->add_option("--format,-f", s.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        return sub;
    };
    auto* validate = add("validate", "check a graph file and report definiteness and minimality");
    validate->add_option("--cycle", s.cycle, "annotate DOT output with zmin, zk or a cycle literal");
    add("invariants", "determinant, Z_min, Z_K, min chi");
    add("zmin", "Artin cycle with its Laufer sequence");
    add("zk", "canonical cycle");
    add("dual", "dual cycle E_i^*")->add_option("--vertex", s.vertex, "vertex id")->required();
    add("minchi", "global minimum of chi and the arithmetic genus");
    auto* path = add("path", "Path(Z) for --target, otherwise Path(Gamma)");
    path->add_option("--target", s.target, "zmin, zk or a cycle literal");
    path->add_option("--cap", s.cap, "upper cycle for non-numerically-Gorenstein graphs");
    add("antinef", "anti-nef cycles with fixed coefficients")
        ->add_option("--fix", s.fixes, "ID=N, repeatable")
        ->required();
    add("splice", "splice diagram, semigroup condition")
        ->add_flag("--equations", s.equations, "also emit leading forms");
    add("check-kodaira", "semidefiniteness after gluing a (-1)-vertex")
        ->add_option("--attach", s.attach, "vertex id")
        ->required();
    auto* report = add("report", "full invariant report");
    report->add_option("--cap", s.cap, "cap for Path(Gamma)");
    report->add_option("--attach", s.attach, "also check the Kodaira extension at this vertex");
    report->add_option("--cycle", s.cycle, "annotate DOT output with zmin, zk or a cycle literal");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const auto command = app.get_subcommands().front()->get_name();
    try {
        return execute(command, s, in, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace singlat
