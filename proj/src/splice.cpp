#include "singlat/splice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace singlat {

SpliceDiagram::SpliceDiagram(const ResolutionGraph& g, std::vector<std::size_t> nodes, std::vector<std::size_t> leaves,
                             std::vector<SpliceEdge> edges, Integer det_neg_m)
    : nodes_(std::move(nodes)),
      leaves_(std::move(leaves)),
      edges_(std::move(edges)),
      is_node_(g.size(), false),
      is_leaf_(g.size(), false),
      det_(std::move(det_neg_m)) {
    for (const auto& v : g.vertices()) names_.push_back(v.id);
    for (auto v : nodes_) is_node_[v] = true;
    for (auto v : leaves_) is_leaf_[v] = true;
}

bool SpliceDiagram::is_node(std::size_t vertex) const { return vertex < is_node_.size() && is_node_[vertex]; }
bool SpliceDiagram::is_leaf(std::size_t vertex) const { return vertex < is_leaf_.size() && is_leaf_[vertex]; }

std::size_t SpliceDiagram::other_end(std::size_t edge, std::size_t vertex) const {
    const auto& e = edges_.at(edge);
    if (e.a == vertex) return e.b;
    if (e.b == vertex) return e.a;
    throw Error("vertex '" + names_.at(vertex) + "' is not an end of the edge");
}

const Integer& SpliceDiagram::weight(std::size_t vertex, std::size_t edge) const {
    const auto& e = edges_.at(edge);
    if (e.a == vertex && e.weight_at_a) return *e.weight_at_a;
    if (e.b == vertex && e.weight_at_b) return *e.weight_at_b;
    throw Error("no weight at '" + names_.at(vertex) + "' on this edge");
}

std::vector<std::size_t> SpliceDiagram::leaves_beyond(std::size_t vertex, std::size_t edge) const {
    std::vector<std::size_t> out;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t at, std::size_t via) {
        if (is_leaf(at)) {
            out.push_back(at);
            return;
        }
        for (std::size_t f = 0; f < edges_.size(); ++f)
            if (f != via && (edges_[f].a == at || edges_[f].b == at)) walk(other_end(f, at), f);
    };
    walk(other_end(edge, vertex), edge);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> SpliceDiagram::incident(std::size_t vertex) const {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (std::size_t f = 0; f < edges_.size(); ++f)
        if (edges_[f].a == vertex || edges_[f].b == vertex) keyed.emplace_back(leaves_beyond(vertex, f).front(), f);
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> out;
    for (auto [key, f] : keyed) out.push_back(f);
    return out;
}

Integer SpliceDiagram::other_weights(std::size_t node, std::size_t edge) const {
    Integer product = 1;
    for (auto f : incident(node))
        if (f != edge) product *= weight(node, f);
    return product;
}

Integer SpliceDiagram::outer_linking(std::size_t node, std::size_t leaf) const {
    auto towards = [&](std::size_t at, std::size_t via) -> std::size_t {
        for (auto f : incident(at)) {
            if (f == via) continue;
            const auto beyond = leaves_beyond(at, f);
            if (std::binary_search(beyond.begin(), beyond.end(), leaf)) return f;
        }
        throw Error("leaf '" + names_.at(leaf) + "' not reachable");
    };
    Integer product = 1;
    std::size_t via = towards(node, edges_.size());
    std::size_t at = other_end(via, node);
    while (at != leaf) {
        const auto next = towards(at, via);
        for (auto f : incident(at))
            if (f != via && f != next) product *= weight(at, f);
        via = next;
        at = other_end(next, at);
    }
    return product;
}

Integer SpliceDiagram::linking(std::size_t node, std::size_t leaf) const {
    for (auto f : incident(node)) {
        const auto beyond = leaves_beyond(node, f);
        if (std::binary_search(beyond.begin(), beyond.end(), leaf))
            return other_weights(node, f) * outer_linking(node, leaf);
    }
    throw Error("leaf '" + names_.at(leaf) + "' not reachable");
}

Integer SpliceDiagram::node_degree(std::size_t node) const {
    Integer product = 1;
    for (auto f : incident(node)) product *= weight(node, f);
    return product;
}

SpliceDiagram splice_diagram(const ResolutionGraph& g) {
    if (!g.is_tree()) throw Error("splice diagrams need a tree; the graph has cycles");
    if (!g.all_rational()) throw Error("splice diagrams need every vertex to have genus 0");

    std::vector<std::size_t> nodes;
    std::vector<std::size_t> leaves;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.valence(v) >= 3) nodes.push_back(v);
        if (g.valence(v) == 1) leaves.push_back(v);
    }
    if (nodes.empty())
        throw Error("graph has no vertex of valence >= 3; after suppressing valence-2 vertices "
                    "the splice diagram has no node");

    const auto neg = intersection_matrix(g).negated();
    auto branch_weight = [&](std::size_t from, std::size_t first) {
        std::vector<std::size_t> branch{first};
        std::vector<std::size_t> stack{first};
        std::vector<bool> seen(g.size(), false);
        seen[from] = seen[first] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbours(v))
                if (!seen[w]) {
                    seen[w] = true;
                    branch.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(branch.begin(), branch.end());
        Integer d = determinant(neg.principal(branch));
        if (d <= 0)
            throw Error("branch at '" + g.vertex(from).id + "' towards '" + g.vertex(first).id +
                        "' is not negative definite");
        return d;
    };

    std::vector<SpliceEdge> edges;
    std::vector<std::size_t> ends = nodes;
    ends.insert(ends.end(), leaves.begin(), leaves.end());
    std::sort(ends.begin(), ends.end());
    for (auto x : ends) {
        for (auto u : g.neighbours(x)) {
            SpliceEdge e;
            e.a = x;
            std::size_t prev = x;
            std::size_t cur = u;
            while (g.valence(cur) == 2) {
                e.chain.push_back(cur);
                const auto& nb = g.neighbours(cur);
                const auto next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            e.b = cur;
            if (e.a > e.b) continue;  // found again from the other end
            if (g.valence(e.a) >= 3) e.weight_at_a = branch_weight(e.a, u);
            if (g.valence(e.b) >= 3) e.weight_at_b = branch_weight(e.b, e.chain.empty() ? e.a : e.chain.back());
            edges.push_back(std::move(e));
        }
    }
    return SpliceDiagram(g, std::move(nodes), std::move(leaves), std::move(edges), determinant(neg));
}

Integer edge_determinant(const SpliceDiagram& sd, std::size_t edge) {
    const auto& e = sd.edges().at(edge);
    if (!sd.is_node(e.a) || !sd.is_node(e.b))
        throw Error("edge determinant is defined only for edges between two nodes");
    return sd.weight(e.a, edge) * sd.weight(e.b, edge) - sd.other_weights(e.a, edge) * sd.other_weights(e.b, edge);
}

bool in_semigroup(const Integer& value, const std::vector<Integer>& generators) {
    if (value < 0) return false;
    if (value == 0) return true;
    constexpr long kMaxTable = 50'000'000;
    if (value > kMaxTable) throw Error("semigroup membership value too large: " + value.get_str());
    const long target = value.get_si();
    std::vector<long> gens;
    for (const auto& g : generators) {
        if (g <= 0) throw Error("semigroup generators must be positive");
        if (g <= target) gens.push_back(g.get_si());
    }
    std::vector<char> reachable(static_cast<std::size_t>(target) + 1, 0);
    reachable[0] = 1;
    for (long v = 1; v <= target; ++v)
        for (auto g : gens)
            if (g <= v && reachable[static_cast<std::size_t>(v - g)]) {
                reachable[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return reachable[static_cast<std::size_t>(target)] != 0;
}

std::vector<std::vector<long>> exponent_solutions(const std::vector<Integer>& weights, const Integer& target) {
    for (const auto& w : weights)
        if (w <= 0) throw Error("exponent weights must be positive");
    std::vector<std::vector<long>> out;
    std::vector<long> alpha(weights.size(), 0);
    std::function<void(std::size_t, const Integer&)> descend = [&](std::size_t k, const Integer& rest) {
        if (k == weights.size()) {
            if (rest == 0) out.push_back(alpha);
            return;
        }
        const Integer top = rest / weights[k];
        for (long a = 0; a <= to_long(top); ++a) {
            alpha[k] = a;
            descend(k + 1, rest - weights[k] * a);
        }
        alpha[k] = 0;
    };
    if (target >= 0) descend(0, target);
    return out;
}

std::vector<SemigroupVerdict> semigroup_condition(const SpliceDiagram& sd) {
    std::vector<SemigroupVerdict> out;
    for (auto v : sd.nodes()) {
        for (auto e : sd.incident(v)) {
            SemigroupVerdict verdict;
            verdict.node = v;
            verdict.edge = e;
            verdict.weight = sd.weight(v, e);
            verdict.leaves = sd.leaves_beyond(v, e);
            for (auto w : verdict.leaves) verdict.generators.push_back(sd.outer_linking(v, w));
            verdict.satisfied = in_semigroup(verdict.weight, verdict.generators);
            out.push_back(std::move(verdict));
        }
    }
    return out;
}

std::vector<LeadingForm> leading_forms(const SpliceDiagram& sd) {
    for (auto v : sd.nodes())
        if (sd.incident(v).size() != 3)
            throw Error("node '" + sd.name(v) + "' has valence " + std::to_string(sd.incident(v).size()) +
                        "; leading forms are implemented for valence-3 nodes only");
    for (const auto& verdict : semigroup_condition(sd))
        if (!verdict.satisfied)
            throw Error("semigroup condition fails at node '" + sd.name(verdict.node) + "'");

    std::vector<LeadingForm> forms;
    for (auto v : sd.nodes()) {
        LeadingForm form;
        form.node = v;
        const Integer degree = sd.node_degree(v);
        for (auto e : sd.incident(v)) {
            const auto leaves = sd.leaves_beyond(v, e);
            std::vector<Integer> weights;
            for (auto w : leaves) weights.push_back(sd.linking(v, w));
            auto sols = exponent_solutions(weights, degree);
            if (sols.empty())
                throw Error("no admissible monomial at node '" + sd.name(v) + "' towards '" +
                            sd.name(sd.other_end(e, v)) + "'");
            auto total = [](const std::vector<long>& a) { return std::accumulate(a.begin(), a.end(), 0L); };
            const auto best = *std::min_element(sols.begin(), sols.end(), [&](const auto& x, const auto& y) {
                const auto tx = total(x);
                const auto ty = total(y);
                return tx != ty ? tx < ty : x < y;
            });
            Monomial m;
            for (std::size_t k = 0; k < leaves.size(); ++k)
                if (best[k] > 0) m.powers.emplace_back(leaves[k], best[k]);
            form.monomials.push_back(std::move(m));
        }
        forms.push_back(std::move(form));
    }
    return forms;
}

std::string format_form(const SpliceDiagram& sd, const LeadingForm& form) {
    std::string out;
    for (std::size_t m = 0; m < form.monomials.size(); ++m) {
        if (m) out += " + ";
        const auto& powers = form.monomials[m].powers;
        for (std::size_t k = 0; k < powers.size(); ++k) {
            if (k) out += '*';
            out += "z_" + sd.name(powers[k].first);
            if (powers[k].second != 1) out += '^' + std::to_string(powers[k].second);
        }
    }
    return out;
}

}  // namespace singlat
