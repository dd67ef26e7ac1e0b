#pragma once

// Serialization of invariants: JSON (byte-stable key order), flat text, DOT.

#include "singlat/cycle.hpp"
#include "singlat/laufer.hpp"
#include "singlat/path.hpp"
#include "singlat/splice.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace singlat {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers (strings if they overflow a machine word),
/// non-integral rationals as "p/q" strings.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const ResolutionGraph& g, const Cycle& c);
Json to_json(const ResolutionGraph& g, const ComputationSequence& seq);
Json to_json(const ResolutionGraph& g);
Json to_json(const ResolutionGraph& g, const PathResult& path);
Json to_json(const SpliceDiagram& sd, bool with_forms);

/// Reads a cycle back from its JSON object form.
Cycle cycle_from_json(const ResolutionGraph& g, const Json& j);

struct ReportOptions {
    std::optional<Cycle> cap;
    std::optional<std::string> attach;
    PathOptions path;
};

/// The full invariant report. Keys: graph, det_neg_m, negative_definite,
/// numerically_gorenstein, z_min, z_k, min_chi, min_chi_witness,
/// arithmetic_genus, pg_lower_bound, path, bounds, splice (trees with a node
/// only), kodaira_extension (with attach only).
Json invariant_report(const Lattice& lat, const ReportOptions& options);

/// One `key: value` line per scalar, nested keys joined with '.'. Cycles are
/// written as literals, sequences as arrow chains ('*' marks a simple jump).
std::string render_text(const ResolutionGraph& g, const Json& j);

/// "E_0:0 -> E_6:1 -> E_5:2* -> ..."
std::string format_sequence(const ResolutionGraph& g, const ComputationSequence& seq);

/// Vertices labelled "id (euler)", plus the coefficient when a cycle is given.
std::string graph_dot(const ResolutionGraph& g, const std::optional<Cycle>& cycle = std::nullopt);
std::string splice_dot(const SpliceDiagram& sd);

}  // namespace singlat
