#include "singlat/chi.hpp"

#include <vector>

namespace singlat {

namespace {

// q(x) = sum_k d[k] * (x_k + sum_{j>k} l[j][k] x_j)^2 from A = L D L^T.
struct Ldl {
    std::vector<std::vector<Rational>> l;
    std::vector<Rational> d;
};

Ldl decompose(const IntMatrix& a) {
    const std::size_t n = a.size();
    Ldl f{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)), std::vector<Rational>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rational dj = a(j, j);
        for (std::size_t k = 0; k < j; ++k) dj -= f.l[j][k] * f.l[j][k] * f.d[k];
        if (dj <= 0) throw Error("quadratic form is not positive definite");
        f.d[j] = dj;
        f.l[j][j] = 1;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= f.l[i][k] * f.l[j][k] * f.d[k];
            f.l[i][j] = s / dj;
        }
    }
    return f;
}

Integer round_half_down(const Rational& q) { return ceil(q - Rational(1, 2)); }

class ClosestVectorSearch {
public:
    ClosestVectorSearch(const IntMatrix& form, std::vector<Rational> center)
        : n_(form.size()), form_(form), ldl_(decompose(form)), center_(std::move(center)), point_(n_) {}

    Rational norm_from(const std::vector<Integer>& l) const {
        Rational acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            const Rational xi = Rational(l[i]) - center_[i];
            for (std::size_t j = 0; j < n_; ++j) acc += xi * form_(i, j) * (Rational(l[j]) - center_[j]);
        }
        return acc;
    }

    void run() {
        best_point_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) best_point_[i] = round_half_down(center_[i]);
        best_ = norm_from(best_point_);
        if (n_ > 0) descend(n_ - 1, 0);
    }

    const Rational& best_norm() const { return best_; }
    const std::vector<Integer>& best_point() const { return best_point_; }
    std::uint64_t leaves() const { return leaves_; }

private:
    void descend(std::size_t k, const Rational& partial) {
        Rational shift = -center_[k];
        for (std::size_t j = k + 1; j < n_; ++j) shift += ldl_.l[j][k] * (Rational(point_[j]) - center_[j]);
        const Rational budget = best_ - partial;
        auto term = [&](const Integer& y) -> Rational {
            const Rational u = Rational(y) + shift;
            return ldl_.d[k] * u * u;
        };
        // Feasible y form an interval around the integer nearest to -shift.
        const Integer mid = round_half_down(-shift);
        if (term(mid) > budget) return;
        Integer lo = mid;
        Integer hi = mid;
        while (term(lo - 1) <= budget) --lo;
        while (term(hi + 1) <= budget) ++hi;
        for (Integer y = lo; y <= hi; ++y) {
            // best_ may have shrunk while exploring smaller y.
            const Rational next = partial + term(y);
            if (next > best_) continue;
            point_[k] = y;
            if (k == 0) {
                visit(next);
            } else {
                descend(k - 1, next);
            }
        }
    }

    void visit(const Rational& norm) {
        ++leaves_;
        if (norm < best_ || (norm == best_ && point_ < best_point_)) {
            best_ = norm;
            best_point_ = point_;
        }
    }

    std::size_t n_;
    const IntMatrix& form_;
    Ldl ldl_;
    std::vector<Rational> center_;
    std::vector<Integer> point_;
    std::vector<Integer> best_point_;
    Rational best_;
    std::uint64_t leaves_ = 0;
};

}  // namespace

ChiMinResult min_chi(const Lattice& lat) {
    lat.require_negative_definite();
    const auto& zk = lat.canonical_cycle();
    std::vector<Rational> center(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) center[i] = zk[i] / 2;

    const auto form = lat.matrix().negated();
    ClosestVectorSearch search(form, center);
    search.run();

    Cycle witness(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) witness[i] = search.best_point()[i];
    const Rational value = chi(lat, witness);
    if (!is_integer(value)) throw Error("internal: chi of an integral cycle is not an integer");
    return ChiMinResult{value.get_num(), std::move(witness), search.leaves()};
}

Integer arithmetic_genus(const Lattice& lat) { return 1 - min_chi(lat).min_chi; }

Integer pg_lower_bound(const Lattice& lat) { return arithmetic_genus(lat); }

}  // namespace singlat
