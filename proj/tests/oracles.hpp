#pragma once

// Test-only brute-force oracles. Nothing here calls the library's solvers,
// elimination, Laufer loops, enumeration, or path search; only the graph and
// cycle containers are shared.

#include "singlat/cycle.hpp"
#include "singlat/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using singlat::Integer;
using singlat::Rational;
using Matrix = std::vector<std::vector<long long>>;

inline Matrix neg_form(const singlat::ResolutionGraph& g) {
    Matrix a(g.size(), std::vector<long long>(g.size(), 0));
    for (std::size_t i = 0; i < g.size(); ++i) a[i][i] = -g.vertex(i).euler;
    for (const auto& [x, y] : g.edges()) a[x][y] = a[y][x] = -1;
    return a;
}

/// Laplace expansion along the first row.
inline Integer cofactor_det(const Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return Integer(static_cast<long>(a[0][0]));
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        Matrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) minor[i - 1].push_back(a[i][k]);
        const Integer term = Integer(static_cast<long>(a[0][j])) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

inline Matrix sub(const Matrix& a, const std::vector<std::size_t>& idx) {
    Matrix out(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = a[idx[i]][idx[j]];
    return out;
}

/// Sylvester: every leading principal minor of -M positive.
inline bool negative_definite(const singlat::ResolutionGraph& g) {
    const auto a = neg_form(g);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < a.size(); ++k) {
        idx.push_back(k);
        if (cofactor_det(sub(a, idx)) <= 0) return false;
    }
    return true;
}

/// Every principal minor of -M nonnegative.
inline bool negative_semidefinite(const singlat::ResolutionGraph& g) {
    const auto a = neg_form(g);
    const std::size_t n = a.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) idx.push_back(k);
        if (cofactor_det(sub(a, idx)) < 0) return false;
    }
    return true;
}

/// (-M)^{-1} by the adjugate; row i is E_i^*.
inline std::vector<std::vector<Rational>> inverse(const singlat::ResolutionGraph& g) {
    const auto a = neg_form(g);
    const std::size_t n = a.size();
    const Integer det = cofactor_det(a);
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            Matrix minor(n - 1, std::vector<long long>(n - 1));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c) minor[r][c] = a[rows[r]][cols[c]];
            const Integer cof = ((i + j) % 2 == 0 ? 1 : -1) * cofactor_det(minor);
            inv[i][j] = Rational(cof, det);
            inv[i][j].canonicalize();
        }
    return inv;
}

/// Z_K from (Z_K, E_i) = E_i^2 + 2 - 2g_i: Z_K = -(-M)^{-1} k.
inline std::vector<Rational> canonical(const singlat::ResolutionGraph& g) {
    const auto inv = inverse(g);
    const std::size_t n = g.size();
    std::vector<Rational> z(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = g.vertex(j);
            z[i] -= inv[i][j] * (v.euler + 2 - 2 * v.genus);
        }
    return z;
}

inline long long pair_vertex(const singlat::ResolutionGraph& g, std::size_t i, const std::vector<long long>& x) {
    long long acc = g.vertex(i).euler * x[i];
    for (auto j : g.neighbours(i)) acc += x[j];
    return acc;
}

inline Rational pair_rational(const singlat::ResolutionGraph& g, const std::vector<Rational>& a,
                              const std::vector<Rational>& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Rational row = Rational(g.vertex(i).euler) * b[i];
        for (auto j : g.neighbours(i)) row += b[j];
        acc += a[i] * row;
    }
    return acc;
}

inline bool antinef(const singlat::ResolutionGraph& g, const std::vector<long long>& x) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (pair_vertex(g, i, x) > 0) return false;
    return true;
}

/// Calls f on every integer point of the box [lo, hi]; stops early if f returns false.
inline void for_box(const std::vector<long long>& lo, const std::vector<long long>& hi,
                    const std::function<bool(const std::vector<long long>&)>& f) {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return;
    std::vector<long long> x = lo;
    for (;;) {
        if (!f(x)) return;
        std::size_t i = 0;
        while (i < x.size() && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == x.size()) return;
        ++x[i];
    }
}

inline constexpr std::uint64_t kMaxBox = 200'000;

/// Point count of the box, saturating just above kMaxBox.
inline std::uint64_t box_size(const std::vector<long long>& lo, const std::vector<long long>& hi) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const auto w = static_cast<std::uint64_t>(std::max(0LL, hi[i] - lo[i] + 1));
        if (w == 0) return 0;
        if (w > kMaxBox || s > kMaxBox / w) return kMaxBox + 1;
        s *= w;
    }
    return s;
}

inline singlat::Cycle to_cycle(const std::vector<long long>& x) {
    singlat::Cycle c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = static_cast<long>(x[i]);
    return c;
}

inline long long floor_ll(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

/// Least nonzero effective anti-nef cycle by scanning a box bounded by an
/// integral multiple of every E_i^*. nullopt if the box is too large.
inline std::optional<singlat::Cycle> minimal_antinef(const singlat::ResolutionGraph& g) {
    const std::size_t n = g.size();
    const auto inv = inverse(g);
    std::vector<long long> hi(n, std::numeric_limits<long long>::max());
    for (std::size_t i = 0; i < n; ++i) {
        Integer k = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), inv[i][j].get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) hi[j] = std::min(hi[j], floor_ll(Rational(k) * inv[i][j]));
    }
    const std::vector<long long> lo(n, 0);
    if (box_size(lo, hi) > kMaxBox) return std::nullopt;
    std::vector<std::vector<long long>> found;
    for_box(lo, hi, [&](const std::vector<long long>& x) {
        if (std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; })) return true;
        if (antinef(g, x)) found.push_back(x);
        return true;
    });
    if (found.empty()) return std::nullopt;
    // The least element must lie below every other one.
    for (const auto& cand : found) {
        bool least = true;
        for (const auto& other : found)
            for (std::size_t i = 0; i < n && least; ++i)
                if (cand[i] > other[i]) least = false;
        if (least) return to_cycle(cand);
    }
    return std::nullopt;
}

inline Rational chi(const singlat::ResolutionGraph& g, const std::vector<Rational>& zk,
                    const std::vector<long long>& l) {
    std::vector<Rational> lq(l.size()), diff(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        lq[i] = static_cast<long>(l[i]);
        diff[i] = lq[i] - zk[i];
    }
    return -pair_rational(g, lq, diff) / 2;
}

struct ChiScan {
    Rational min;
    singlat::Cycle witness;
};

/// Box scan of chi over {l : (l_i - c_i)^2 <= R (A^{-1})_ii}, c = Z_K/2,
/// R = q(round(c) - c), q(x) = x^T A x, A = -M.
inline std::optional<ChiScan> min_chi(const singlat::ResolutionGraph& g) {
    const std::size_t n = g.size();
    const auto zk = canonical(g);
    const auto inv = inverse(g);
    std::vector<Rational> c(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = zk[i] / 2;
        const long long r = -floor_ll(Rational(1, 2) - c[i]);  // round half down
        x[i] = Rational(static_cast<long>(r)) - c[i];
    }
    const Rational radius = -pair_rational(g, x, x);
    std::vector<long long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational bound = radius * inv[i][i];
        auto ok = [&](long long l) {
            const Rational d = Rational(static_cast<long>(l)) - c[i];
            return d * d <= bound;
        };
        long long mid = floor_ll(c[i]);
        lo[i] = hi[i] = mid;
        while (ok(lo[i] - 1)) --lo[i];
        while (ok(hi[i] + 1)) ++hi[i];
        if (!ok(mid)) {
            // The center may sit just right of mid.
            lo[i] = hi[i] = mid + 1;
            while (ok(hi[i] + 1)) ++hi[i];
        }
    }
    if (box_size(lo, hi) > kMaxBox) return std::nullopt;
    std::optional<ChiScan> best;
    for_box(lo, hi, [&](const std::vector<long long>& l) {
        const Rational v = chi(g, zk, l);
        if (!best || v < best->min) best = ChiScan{v, to_cycle(l)};
        else if (v == best->min && singlat::lex_less(to_cycle(l), best->witness)) best->witness = to_cycle(l);
        return true;
    });
    return best;
}

/// Forward DP over the cube [0, z] in mixed-radix order (a topological order,
/// since every step raises the index).
inline long path_dp(const singlat::ResolutionGraph& g, const std::vector<long long>& z) {
    const std::size_t n = g.size();
    std::vector<std::uint64_t> stride(n);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        stride[i] = count;
        count *= static_cast<std::uint64_t>(z[i] + 1);
    }
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<long> best(count, kInf);
    best[0] = 0;
    std::vector<long long> l(n, 0);
    for (std::uint64_t s = 0; s < count; ++s) {
        std::uint64_t rest = s;
        for (std::size_t i = 0; i < n; ++i) {
            l[i] = static_cast<long long>(rest % static_cast<std::uint64_t>(z[i] + 1));
            rest /= static_cast<std::uint64_t>(z[i] + 1);
        }
        if (best[s] == kInf) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (l[i] == z[i]) continue;
            const long cost = std::max(0LL, pair_vertex(g, i, l) - 1);
            best[s + stride[i]] = std::min(best[s + stride[i]], best[s] + cost);
        }
    }
    return best[count - 1];
}

/// Effective integral anti-nef cycles with coeff_v = value, by box scan with
/// x_u <= value * max_i (E_i^*)_u / (E_i^*)_v.
inline std::optional<std::vector<singlat::Cycle>> antinef_with(const singlat::ResolutionGraph& g, std::size_t v,
                                                               long value) {
    const std::size_t n = g.size();
    const auto inv = inverse(g);
    std::vector<long long> lo(n, 0), hi(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        Rational worst = 0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, Rational(inv[i][u] / inv[i][v]));
        hi[u] = floor_ll(worst * value);
    }
    lo[v] = hi[v] = value;
    if (box_size(lo, hi) > kMaxBox) return std::nullopt;
    std::vector<singlat::Cycle> out;
    for_box(lo, hi, [&](const std::vector<long long>& x) {
        if (antinef(g, x)) out.push_back(to_cycle(x));
        return true;
    });
    std::sort(out.begin(), out.end(), singlat::lex_less);
    return out;
}

/// Random connected simple graph: random tree plus extra edges.
inline singlat::ResolutionGraph random_graph(std::mt19937_64& rng, std::size_t max_n, long euler_lo, long euler_hi,
                                             int extra_edge_percent = 15) {
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    std::uniform_int_distribution<long> euler(euler_lo, euler_hi);
    std::uniform_int_distribution<int> percent(0, 99);
    const std::size_t n = size(rng);
    std::vector<singlat::Vertex> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), euler(rng), 0});
    std::vector<singlat::Edge> es;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 1; i < n; ++i) {
        const auto p = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        es.emplace_back(p, i);
        adj[p][i] = adj[i][p] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!adj[i][j] && percent(rng) < extra_edge_percent) es.emplace_back(i, j);
    return singlat::ResolutionGraph(std::move(vs), std::move(es));
}

inline singlat::ResolutionGraph random_definite_graph(std::mt19937_64& rng, std::size_t max_n) {
    for (;;) {
        auto g = random_graph(rng, max_n, -5, -1);
        if (negative_definite(g)) return g;
    }
}

}  // namespace oracle
