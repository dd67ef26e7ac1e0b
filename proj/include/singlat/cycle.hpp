#pragma once

// Cycles on a resolution graph and the lattice data derived from the
// intersection form: pairing, chi, canonical cycle, dual cycles.

#include "singlat/exact.hpp"
#include "singlat/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singlat {

/// Rational coefficient vector in canonical vertex order.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::size_t n) : coeffs_(n) {}
    explicit Cycle(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
    static Cycle from_integers(const std::vector<long>& coeffs);
    /// The reduced curve E_i as a cycle of length n.
    static Cycle basis(std::size_t n, std::size_t i);

    std::size_t size() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_integral() const;
    bool is_effective() const;
    bool is_zero() const;

    /// Componentwise floor.
    Cycle floor() const;
    /// Integer coefficients; throws Error unless integral and in machine range.
    std::vector<long> to_longs() const;

    Cycle& operator+=(const Cycle& other);
    Cycle& operator-=(const Cycle& other);
    Cycle& operator*=(const Rational& k);
    friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
    friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
    friend Cycle operator*(const Rational& k, Cycle a) { return a *= k; }

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// a <= b in every coordinate.
bool componentwise_le(const Cycle& a, const Cycle& b);
/// Lexicographic order on coefficients; the order used for all cycle lists.
bool lex_less(const Cycle& a, const Cycle& b);

/// Literal syntax `id:coeff,id:coeff` with exact rationals; omitted ids are 0.
Cycle parse_cycle(const ResolutionGraph& g, std::string_view literal);
/// Every vertex listed, in canonical order.
std::string format_cycle(const ResolutionGraph& g, const Cycle& c);

/// A graph together with its intersection form and the exact data solved from
/// it. Construction never fails; the cycle accessors throw Error on graphs
/// that are not negative definite.
class Lattice {
public:
    explicit Lattice(ResolutionGraph g);

    const ResolutionGraph& graph() const { return graph_; }
    std::size_t size() const { return graph_.size(); }
    const IntMatrix& matrix() const { return matrix_; }
    const DefinitenessReport& definiteness() const { return definiteness_; }
    bool negative_definite() const { return definiteness_.negative_definite; }
    void require_negative_definite() const;

    /// (Z_K, E_i) = E_i^2 + 2 - 2 g_i.
    const Cycle& canonical_cycle() const;
    /// E_i^* with (E_i^*, E_j) = -delta_ij.
    const Cycle& dual_cycle(std::size_t i) const;

    Rational pairing(const Cycle& a, const Cycle& b) const;
    /// (E_i, c) for an integral cycle given by its coefficients.
    long pairing_with_vertex(std::size_t i, const std::vector<long>& c) const;
    Rational pairing_with_vertex(std::size_t i, const Cycle& c) const;
    bool is_antinef(const Cycle& c) const;

    Cycle cycle(std::string_view literal) const { return parse_cycle(graph_, literal); }
    std::string format(const Cycle& c) const { return format_cycle(graph_, c); }

private:
    void check_length(const Cycle& c) const;

    ResolutionGraph graph_;
    IntMatrix matrix_;
    DefinitenessReport definiteness_;
    std::optional<Cycle> canonical_;
    std::vector<Cycle> duals_;
};

Rational pairing(const Lattice& lat, const Cycle& a, const Cycle& b);
/// chi(l) = -(l, l - Z_K) / 2.
Rational chi(const Lattice& lat, const Cycle& l);
Cycle canonical_cycle(const Lattice& lat);
Cycle dual_cycle(const Lattice& lat, std::string_view id);
bool is_numerically_gorenstein(const Lattice& lat);

struct CoefficientConstraint {
    std::string vertex;
    long value = 0;
};

/// All integral effective anti-nef cycles with the prescribed coefficients,
/// sorted lexicographically. Every anti-nef cycle is sum c_i E_i^* with
/// c_i = -(x, E_i) >= 0, and each coefficient of each E_i^* is positive, so a
/// fixed coefficient bounds every c_i.
std::vector<Cycle> enumerate_antinef(const Lattice& lat,
                                     const std::vector<CoefficientConstraint>& constraints);

}  // namespace singlat
