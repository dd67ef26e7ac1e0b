#pragma once

// Resolution graphs: weighted dual graphs of exceptional curves. Vertex order
// is the canonical coefficient order for every cycle downstream.

#include "singlat/exact.hpp"
#include "singlat/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singlat {

struct Vertex {
    std::string id;
    long euler = 0;  // self-intersection E_i^2
    long genus = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;  // first < second

/// Raised by parse_graph; carries the 1-based line number (0 for whole-file
/// problems such as disconnectedness).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Connected simple graph with Euler numbers and genera. Immutable.
class ResolutionGraph {
public:
    /// Validates: at least one vertex, distinct ids, nonnegative genera, edge
    /// endpoints in range, no self-loops, no duplicate edges, connected.
    ResolutionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
    /// Edges in insertion order, each normalized to (low, high).
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbours(std::size_t i) const { return adjacency_[i]; }
    std::size_t valence(std::size_t i) const { return adjacency_[i].size(); }

    std::optional<std::size_t> find(std::string_view id) const;
    /// Throws Error("unknown vertex ...") when absent.
    std::size_t index_of(std::string_view id) const;

    bool is_tree() const { return edges_.size() + 1 == vertices_.size(); }
    bool all_rational() const;

    /// Same vertices in the same order and the same edge set.
    friend bool operator==(const ResolutionGraph& a, const ResolutionGraph& b);

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Line format: `vertex <id> <euler> [genus=<g>]`, `edge <id> <id>`, '#'
/// starts a comment.
ResolutionGraph parse_graph(std::string_view text);
std::string serialize_graph(const ResolutionGraph& g);

/// M_ii = euler(i), M_ij = 1 on edges, 0 otherwise.
IntMatrix intersection_matrix(const ResolutionGraph& g);

struct DefinitenessReport {
    bool negative_definite = false;
    bool negative_semidefinite = false;
    Integer det_neg_m;
};

DefinitenessReport definiteness(const ResolutionGraph& g);

/// Glues a new genus-0 (-1)-vertex to `attach`. The new id is the old vertex
/// count, primed until unused.
ResolutionGraph extend_with_minus_one(const ResolutionGraph& g, std::string_view attach);

struct MinimalityReport {
    bool minimal = true;
    std::vector<std::string> contractible;
};

/// Rational (-1)-vertices of valence <= 2 can be blown down while the graph
/// stays simple with normal crossings.
MinimalityReport is_minimal_good(const ResolutionGraph& g);

}  // namespace singlat
