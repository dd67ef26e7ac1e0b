#include "singlat/report.hpp"

#include "singlat/chi.hpp"

#include <algorithm>
#include <sstream>

namespace singlat {

Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Json to_json(const Rational& q) {
    if (is_integer(q)) return to_json(Integer(q.get_num()));
    return Json(to_string(q));
}

Json to_json(const ResolutionGraph& g, const Cycle& c) {
    Json j = Json::object();
    for (std::size_t i = 0; i < g.size(); ++i) j[g.vertex(i).id] = to_json(c[i]);
    return j;
}

Cycle cycle_from_json(const ResolutionGraph& g, const Json& j) {
    if (!j.is_object()) throw Error("cycle JSON must be an object");
    Cycle c(g.size());
    for (const auto& [key, value] : j.items()) {
        const auto i = g.index_of(key);
        if (value.is_number_integer()) {
            c[i] = value.get<long>();
        } else if (value.is_string()) {
            c[i] = parse_rational(value.get<std::string>());
        } else {
            throw Error("cycle coefficient for '" + key + "' must be an integer or \"p/q\"");
        }
    }
    return c;
}

Json to_json(const ResolutionGraph& g, const ComputationSequence& seq) {
    Json steps = Json::array();
    for (const auto& s : seq.steps) steps.push_back({{"vertex", g.vertex(s.vertex).id}, {"value", s.value}});
    return steps;
}

Json to_json(const ResolutionGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) vertices.push_back({{"id", v.id}, {"euler", v.euler}, {"genus", v.genus}});
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({g.vertex(a).id, g.vertex(b).id});
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const ResolutionGraph& g, const PathResult& path) {
    return {{"value", path.value},
            {"end_cycle", to_json(g, path.end_cycle)},
            {"witness", to_json(g, path.witness)},
            {"cost", path.witness.cost},
            {"simple_jumps", path.witness.simple_jumps()},
            {"states_expanded", path.states_expanded}};
}

Json to_json(const SpliceDiagram& sd, bool with_forms) {
    auto name = [&](std::size_t v) { return sd.name(v); };
    Json j;
    j["integral_homology_sphere"] = sd.det_neg_m() == 1;
    j["det_neg_m"] = to_json(sd.det_neg_m());
    Json nodes = Json::array();
    for (auto v : sd.nodes()) nodes.push_back(name(v));
    Json leaves = Json::array();
    for (auto v : sd.leaves()) leaves.push_back(name(v));
    j["nodes"] = std::move(nodes);
    j["leaves"] = std::move(leaves);

    Json edges = Json::array();
    Json determinants = Json::array();
    for (std::size_t e = 0; e < sd.edges().size(); ++e) {
        const auto& edge = sd.edges()[e];
        Json chain = Json::array();
        for (auto v : edge.chain) chain.push_back(name(v));
        Json weights = Json::object();
        if (edge.weight_at_a) weights[name(edge.a)] = to_json(*edge.weight_at_a);
        if (edge.weight_at_b) weights[name(edge.b)] = to_json(*edge.weight_at_b);
        edges.push_back({{"ends", {name(edge.a), name(edge.b)}}, {"chain", std::move(chain)},
                         {"weights", std::move(weights)}});
        if (sd.is_node(edge.a) && sd.is_node(edge.b))
            determinants.push_back({{"ends", {name(edge.a), name(edge.b)}},
                                    {"value", to_json(edge_determinant(sd, e))}});
    }
    j["edges"] = std::move(edges);
    j["edge_determinants"] = std::move(determinants);

    Json verdicts = Json::array();
    bool all = true;
    for (const auto& v : semigroup_condition(sd)) {
        Json gens = Json::array();
        for (const auto& g : v.generators) gens.push_back(to_json(g));
        verdicts.push_back({{"node", name(v.node)},
                            {"towards", name(sd.other_end(v.edge, v.node))},
                            {"weight", to_json(v.weight)},
                            {"generators", std::move(gens)},
                            {"satisfied", v.satisfied}});
        all = all && v.satisfied;
    }
    j["semigroup"] = std::move(verdicts);
    j["semigroup_condition"] = all;

    if (with_forms) {
        Json forms = Json::array();
        for (const auto& f : leading_forms(sd)) forms.push_back({{"node", name(f.node)}, {"form", format_form(sd, f)}});
        j["leading_forms"] = std::move(forms);
        j["leading_forms_note"] = "unit coefficients; generic coefficients are implied";
    }
    return j;
}

Json invariant_report(const Lattice& lat, const ReportOptions& options) {
    lat.require_negative_definite();
    const auto& g = lat.graph();
    Json j;
    j["graph"] = to_json(g);
    j["det_neg_m"] = to_json(lat.definiteness().det_neg_m);
    j["negative_definite"] = lat.negative_definite();
    j["numerically_gorenstein"] = is_numerically_gorenstein(lat);
    const auto artin = artin_cycle(lat);
    j["z_min"] = to_json(g, artin.cycle);
    j["z_k"] = to_json(g, lat.canonical_cycle());
    const auto chi_min = min_chi(lat);
    j["min_chi"] = to_json(chi_min.min_chi);
    j["min_chi_witness"] = to_json(g, chi_min.minimizer);
    j["arithmetic_genus"] = to_json(Integer(1 - chi_min.min_chi));
    j["pg_lower_bound"] = to_json(Integer(1 - chi_min.min_chi));

    const bool path_ready = g.all_rational() && (options.cap || (lat.canonical_cycle().is_integral() &&
                                                                 lat.canonical_cycle().is_effective()));
    if (path_ready) {
        const auto path = path_gamma(lat, options.cap, options.path);
        j["path"] = to_json(g, path);
        const Integer lower = 1 - chi_min.min_chi;
        j["bounds"] = {{"pg_lower", to_json(lower)},
                       {"pg_upper", path.value},
                       {"gap", to_json(Integer(Integer(path.value) - lower))},
                       {"pg_lower_note", "valid when p_g > 0"}};
    } else {
        j["path"] = nullptr;
        j["bounds"] = nullptr;
    }

    if (g.is_tree() && g.all_rational()) {
        const bool has_node = [&] {
            for (std::size_t v = 0; v < g.size(); ++v)
                if (g.valence(v) >= 3) return true;
            return false;
        }();
        if (has_node) {
            const auto sd = splice_diagram(g);
            Json splice = to_json(sd, false);
            try {
                Json forms = Json::array();
                for (const auto& f : leading_forms(sd))
                    forms.push_back({{"node", sd.name(f.node)}, {"form", format_form(sd, f)}});
                splice["leading_forms"] = std::move(forms);
                splice["leading_forms_note"] = "unit coefficients; generic coefficients are implied";
            } catch (const Error&) {
                splice["leading_forms"] = nullptr;
            }
            j["splice"] = std::move(splice);
        }
    }

    if (options.attach) {
        const auto ext = extend_with_minus_one(g, *options.attach);
        const auto d = definiteness(ext);
        j["kodaira_extension"] = {{"attach", *options.attach},
                                  {"new_vertex", ext.vertex(ext.size() - 1).id},
                                  {"negative_definite", d.negative_definite},
                                  {"negative_semidefinite", d.negative_semidefinite}};
    }
    return j;
}

std::string format_sequence(const ResolutionGraph& g, const ComputationSequence& seq) {
    std::string out;
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        if (k) out += " -> ";
        out += g.vertex(seq.steps[k].vertex).id + ':' + std::to_string(seq.steps[k].value);
        if (seq.steps[k].value == 2) out += '*';
    }
    return out.empty() ? "(empty)" : out;
}

namespace {

bool is_cycle_object(const ResolutionGraph& g, const Json& j) {
    if (!j.is_object() || j.size() != g.size()) return false;
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
        if (key != g.vertex(i++).id) return false;
        if (!value.is_number_integer() && !value.is_string()) return false;
    }
    return true;
}

bool is_sequence_array(const Json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& step : j)
        if (!step.is_object() || step.size() != 2 || !step.contains("vertex") || !step.contains("value"))
            return false;
    return true;
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void flatten(const ResolutionGraph& g, const std::string& key, const Json& j, std::ostringstream& out) {
    if (is_cycle_object(g, j)) {
        out << key << ": " << format_cycle(g, cycle_from_json(g, j)) << '\n';
    } else if (is_sequence_array(j)) {
        out << key << ": ";
        bool first = true;
        for (const auto& step : j) {
            if (!first) out << " -> ";
            first = false;
            const auto value = step["value"].get<long>();
            out << step["vertex"].get<std::string>() << ':' << value << (value == 2 ? "*" : "");
        }
        out << '\n';
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(g, key.empty() ? k : key + '.' + k, v, out);
    } else if (j.is_array()) {
        const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
        if (scalars) {
            out << key << ": ";
            if (j.empty()) out << "(none)";
            for (std::size_t k = 0; k < j.size(); ++k) out << (k ? "," : "") << scalar_text(j[k]);
            out << '\n';
        } else {
            for (std::size_t k = 0; k < j.size(); ++k) flatten(g, key + '[' + std::to_string(k) + ']', j[k], out);
        }
    } else {
        out << key << ": " << scalar_text(j) << '\n';
    }
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string render_text(const ResolutionGraph& g, const Json& j) {
    std::ostringstream out;
    flatten(g, "", j, out);
    return out.str();
}

std::string graph_dot(const ResolutionGraph& g, const std::optional<Cycle>& cycle) {
    std::ostringstream out;
    out << "graph resolution {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertex(i);
        std::string label = v.id + " (" + std::to_string(v.euler) + ")";
        if (v.genus != 0) label += " [g=" + std::to_string(v.genus) + "]";
        if (cycle) label += '\n' + to_string((*cycle)[i]);
        out << "  " << dot_quote(v.id) << " [label=" << dot_quote(label) << "];\n";
    }
    for (const auto& [a, b] : g.edges())
        out << "  " << dot_quote(g.vertex(a).id) << " -- " << dot_quote(g.vertex(b).id) << ";\n";
    out << "}\n";
    return out.str();
}

std::string splice_dot(const SpliceDiagram& sd) {
    std::ostringstream out;
    out << "graph splice {\n";
    for (auto v : sd.nodes()) out << "  " << dot_quote(sd.name(v)) << " [shape=point, xlabel=" << dot_quote(sd.name(v)) << "];\n";
    for (auto v : sd.leaves()) out << "  " << dot_quote(sd.name(v)) << " [shape=circle];\n";
    for (const auto& e : sd.edges()) {
        out << "  " << dot_quote(sd.name(e.a)) << " -- " << dot_quote(sd.name(e.b)) << " [";
        bool first = true;
        if (e.weight_at_a) {
            out << "taillabel=" << dot_quote(e.weight_at_a->get_str());
            first = false;
        }
        if (e.weight_at_b) out << (first ? "" : ", ") << "headlabel=" << dot_quote(e.weight_at_b->get_str());
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace singlat
