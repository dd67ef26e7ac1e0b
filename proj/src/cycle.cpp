#include "singlat/cycle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace singlat {

Cycle Cycle::from_integers(const std::vector<long>& coeffs) {
    Cycle c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
    return c;
}

Cycle Cycle::basis(std::size_t n, std::size_t i) {
    Cycle c(n);
    c[i] = 1;
    return c;
}

bool Cycle::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

bool Cycle::is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q >= 0; });
}

bool Cycle::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

Cycle Cycle::floor() const {
    Cycle out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = singlat::floor(coeffs_[i]);
    return out;
}

std::vector<long> Cycle::to_longs() const {
    std::vector<long> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = to_long(coeffs_[i]);
    return out;
}

Cycle& Cycle::operator+=(const Cycle& other) {
    if (other.size() != size()) throw Error("cycle length mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += other[i];
    return *this;
}

Cycle& Cycle::operator-=(const Cycle& other) {
    if (other.size() != size()) throw Error("cycle length mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= other[i];
    return *this;
}

Cycle& Cycle::operator*=(const Rational& k) {
    for (auto& q : coeffs_) q *= k;
    return *this;
}

bool componentwise_le(const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) throw Error("cycle length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool lex_less(const Cycle& a, const Cycle& b) {
    return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                        b.coefficients().begin(), b.coefficients().end());
}

Cycle parse_cycle(const ResolutionGraph& g, std::string_view literal) {
    Cycle c(g.size());
    std::set<std::size_t> seen;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    if (trim(literal).empty()) return c;
    while (pos <= literal.size()) {
        const auto comma = literal.find(',', pos);
        const auto item = trim(literal.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                    : comma - pos));
        pos = comma == std::string_view::npos ? literal.size() + 1 : comma + 1;
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw Error("cycle literal entry '" + std::string(item) + "' is not of the form id:coeff");
        const auto i = g.index_of(trim(item.substr(0, colon)));
        if (!seen.insert(i).second) throw Error("vertex '" + g.vertex(i).id + "' repeated in cycle literal");
        c[i] = parse_rational(trim(item.substr(colon + 1)));
    }
    return c;
}

std::string format_cycle(const ResolutionGraph& g, const Cycle& c) {
    if (c.size() != g.size()) throw Error("cycle length mismatch");
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += g.vertex(i).id + ':' + to_string(c[i]);
    }
    return out;
}

Lattice::Lattice(ResolutionGraph g)
    : graph_(std::move(g)), matrix_(intersection_matrix(graph_)), definiteness_(singlat::definiteness(graph_)) {
    if (!definiteness_.negative_definite) return;
    const std::size_t n = size();
    // Columns: adjunction right-hand side, then the unit vectors.
    std::vector<std::vector<Integer>> rhs(n + 1, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = graph_.vertex(i);
        rhs[0][i] = v.euler + 2 - 2 * v.genus;
        rhs[i + 1][i] = -1;
    }
    auto sols = solve(matrix_, rhs);
    canonical_ = Cycle(std::move(sols[0]));
    duals_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) duals_.emplace_back(std::move(sols[i + 1]));
}

void Lattice::require_negative_definite() const {
    if (!negative_definite()) throw Error("graph is not negative definite");
}

const Cycle& Lattice::canonical_cycle() const {
    require_negative_definite();
    return *canonical_;
}

const Cycle& Lattice::dual_cycle(std::size_t i) const {
    require_negative_definite();
    if (i >= duals_.size()) throw Error("vertex index out of range");
    return duals_[i];
}

void Lattice::check_length(const Cycle& c) const {
    if (c.size() != size())
        throw Error("cycle has " + std::to_string(c.size()) + " coefficients, graph has " +
                    std::to_string(size()) + " vertices");
}

Rational Lattice::pairing_with_vertex(std::size_t i, const Cycle& c) const {
    check_length(c);
    Rational acc = Rational(graph_.vertex(i).euler) * c[i];
    for (auto j : graph_.neighbours(i)) acc += c[j];
    return acc;
}

long Lattice::pairing_with_vertex(std::size_t i, const std::vector<long>& c) const {
    long acc = graph_.vertex(i).euler * c[i];
    for (auto j : graph_.neighbours(i)) acc += c[j];
    return acc;
}

Rational Lattice::pairing(const Cycle& a, const Cycle& b) const {
    check_length(a);
    check_length(b);
    Rational acc = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (a[i] == 0) continue;
        acc += a[i] * pairing_with_vertex(i, b);
    }
    return acc;
}

bool Lattice::is_antinef(const Cycle& c) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (pairing_with_vertex(i, c) > 0) return false;
    return true;
}

Rational pairing(const Lattice& lat, const Cycle& a, const Cycle& b) { return lat.pairing(a, b); }

Rational chi(const Lattice& lat, const Cycle& l) {
    return -lat.pairing(l, l - lat.canonical_cycle()) / 2;
}

Cycle canonical_cycle(const Lattice& lat) { return lat.canonical_cycle(); }

Cycle dual_cycle(const Lattice& lat, std::string_view id) {
    return lat.dual_cycle(lat.graph().index_of(id));
}

bool is_numerically_gorenstein(const Lattice& lat) { return lat.canonical_cycle().is_integral(); }

std::vector<Cycle> enumerate_antinef(const Lattice& lat,
                                     const std::vector<CoefficientConstraint>& constraints) {
    if (constraints.empty()) throw Error("anti-nef enumeration needs at least one fixed coefficient");
    lat.require_negative_definite();
    const auto& g = lat.graph();
    const std::size_t n = g.size();

    std::vector<std::size_t> fixed;
    std::vector<Rational> remaining;
    bool any_positive = false;
    for (const auto& c : constraints) {
        const auto v = g.index_of(c.vertex);
        if (std::find(fixed.begin(), fixed.end(), v) != fixed.end())
            throw Error("vertex '" + c.vertex + "' constrained twice");
        fixed.push_back(v);
        remaining.emplace_back(c.value);
        any_positive = any_positive || c.value > 0;
    }
    if (!any_positive) throw Error("anti-nef enumeration needs a positive fixed coefficient");
    if (std::any_of(remaining.begin(), remaining.end(), [](const Rational& r) { return r < 0; })) return {};

    std::vector<Cycle> out;
    std::vector<long> mult(n, 0);
    std::function<void(std::size_t)> descend = [&](std::size_t i) {
        if (i == n) {
            if (!std::all_of(remaining.begin(), remaining.end(), [](const Rational& r) { return r == 0; }))
                return;
            Cycle x(n);
            for (std::size_t k = 0; k < n; ++k)
                if (mult[k]) x += Rational(mult[k]) * lat.dual_cycle(k);
            if (x.is_integral()) out.push_back(std::move(x));
            return;
        }
        const auto& dual = lat.dual_cycle(i);
        Integer bound;
        for (std::size_t k = 0; k < fixed.size(); ++k) {
            const Integer b = singlat::floor(remaining[k] / dual[fixed[k]]);
            if (k == 0 || b < bound) bound = b;
        }
        const long top = to_long(bound);
        for (long c = 0; c <= top; ++c) {
            mult[i] = c;
            descend(i + 1);
            for (std::size_t k = 0; k < fixed.size(); ++k) remaining[k] -= dual[fixed[k]];
        }
        for (std::size_t k = 0; k < fixed.size(); ++k) remaining[k] += Rational(top + 1) * dual[fixed[k]];
        mult[i] = 0;
    };
    descend(0);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace singlat
