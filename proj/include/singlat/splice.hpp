#pragma once

// Splice diagrams of resolution trees: edge weights from branch determinants,
// edge determinants, the semigroup condition, and leading forms of the
// splice-diagram equations.

#include "singlat/cycle.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace singlat {

/// A diagram edge between two ends (nodes or leaves). Interior vertices of
/// valence 2 are absorbed into `chain`. Weights exist only at node ends.
struct SpliceEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<std::size_t> chain;  // from a towards b, exclusive
    std::optional<Integer> weight_at_a;
    std::optional<Integer> weight_at_b;
};

class SpliceDiagram {
public:
    SpliceDiagram(const ResolutionGraph& g, std::vector<std::size_t> nodes, std::vector<std::size_t> leaves,
                  std::vector<SpliceEdge> edges, Integer det_neg_m);

    const std::vector<std::size_t>& nodes() const { return nodes_; }
    const std::vector<std::size_t>& leaves() const { return leaves_; }
    const std::vector<SpliceEdge>& edges() const { return edges_; }
    const std::string& name(std::size_t vertex) const { return names_[vertex]; }
    /// det(-M) of the source graph; 1 means integral homology sphere link.
    const Integer& det_neg_m() const { return det_; }

    bool is_node(std::size_t vertex) const;
    bool is_leaf(std::size_t vertex) const;
    /// Edge indices at `vertex`, ordered by the smallest leaf on their far side.
    std::vector<std::size_t> incident(std::size_t vertex) const;
    std::size_t other_end(std::size_t edge, std::size_t vertex) const;
    /// d_{ve}; throws if `vertex` is not a node end of `edge`.
    const Integer& weight(std::size_t vertex, std::size_t edge) const;
    /// Leaves reachable from `vertex` through `edge`, in canonical order.
    std::vector<std::size_t> leaves_beyond(std::size_t vertex, std::size_t edge) const;
    /// Product of the weights at `node` on edges other than `edge`.
    Integer other_weights(std::size_t node, std::size_t edge) const;
    /// Product of weights adjacent to but not on the path node -> leaf, at
    /// nodes strictly beyond `node`.
    Integer outer_linking(std::size_t node, std::size_t leaf) const;
    /// outer_linking times the off-path weights at `node` itself.
    Integer linking(std::size_t node, std::size_t leaf) const;
    /// Product of all weights at `node`.
    Integer node_degree(std::size_t node) const;

private:
    std::vector<std::size_t> nodes_;
    std::vector<std::size_t> leaves_;
    std::vector<SpliceEdge> edges_;
    std::vector<std::string> names_;
    std::vector<bool> is_node_;
    std::vector<bool> is_leaf_;
    Integer det_;
};

/// Nodes are vertices of valence >= 3, leaves vertices of valence 1. The
/// weight at node v towards edge e is det(-M) of the branch of the graph on
/// the e-side of v. Requires a tree with all genera 0 and at least one node.
SpliceDiagram splice_diagram(const ResolutionGraph& g);

/// d_{ve} d_{we} - (other weights at v)(other weights at w) for a node-node edge.
Integer edge_determinant(const SpliceDiagram& sd, std::size_t edge);

/// Membership of `value` in the numerical semigroup generated by `generators`.
bool in_semigroup(const Integer& value, const std::vector<Integer>& generators);

/// All nonnegative integer vectors alpha with sum alpha_k * weights_k = target.
std::vector<std::vector<long>> exponent_solutions(const std::vector<Integer>& weights, const Integer& target);

struct SemigroupVerdict {
    std::size_t node = 0;
    std::size_t edge = 0;
    Integer weight;                   // d_{ve}
    std::vector<std::size_t> leaves;  // leaves on the e-side
    std::vector<Integer> generators;  // outer linking numbers of those leaves
    bool satisfied = false;
};

/// One verdict per (node, incident edge). Leaf edges have the single generator
/// 1 and always pass.
std::vector<SemigroupVerdict> semigroup_condition(const SpliceDiagram& sd);

struct Monomial {
    std::vector<std::pair<std::size_t, long>> powers;  // (leaf vertex, exponent > 0), canonical order

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct LeadingForm {
    std::size_t node = 0;
    std::vector<Monomial> monomials;  // one per incident edge, all coefficients 1
};

/// Per node: sum over incident edges of a monomial in the leaves beyond that
/// edge with sum alpha_w linking(v, w) = node_degree(v). Minimal total degree,
/// then lexicographically least exponent vector. Requires every node to have
/// valence 3 and the semigroup condition everywhere.
std::vector<LeadingForm> leading_forms(const SpliceDiagram& sd);

/// "z_a^2*z_b + z_c^2 + z_d^3" with variables z_<vertex id>.
std::string format_form(const SpliceDiagram& sd, const LeadingForm& form);

}  // namespace singlat
