#include "singlat/linalg.hpp"

#include <utility>

namespace singlat {

IntMatrix IntMatrix::negated() const {
    IntMatrix out(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

IntMatrix IntMatrix::principal(const std::vector<std::size_t>& rows) const {
    IntMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = (*this)(rows[i], rows[j]);
    return out;
}

namespace {

// In-place Bareiss elimination on an n x m augmented matrix (m >= n). Returns
// the sign-adjusted determinant of the leading n x n block; zero if singular
// (the matrix is then left partially reduced).
Integer bareiss(std::vector<std::vector<Integer>>& a, std::size_t n) {
    Integer prev = 1;
    int sign = 1;
    const std::size_t m = n == 0 ? 0 : a[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return n == 0 ? Integer(1) : Integer(sign * prev);
}

}  // namespace

Integer determinant(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    return bareiss(rows, n);
}

std::vector<std::vector<Rational>> solve(const IntMatrix& a,
                                         const std::vector<std::vector<Integer>>& rhs) {
    const std::size_t n = a.size();
    const std::size_t k = rhs.size();
    std::vector<std::vector<Integer>> aug(n, std::vector<Integer>(n + k));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
        for (std::size_t c = 0; c < k; ++c) {
            if (rhs[c].size() != n) throw Error("right-hand side has wrong length");
            aug[i][n + c] = rhs[c][i];
        }
    }
    if (bareiss(aug, n) == 0) throw Error("singular system");

    std::vector<std::vector<Rational>> out(k, std::vector<Rational>(n));
    for (std::size_t c = 0; c < k; ++c) {
        auto& x = out[c];
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc = aug[ii][n + c];
            for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(aug[ii][j]) * x[j];
            x[ii] = acc / Rational(aug[ii][ii]);
        }
    }
    return out;
}

Definiteness classify_symmetric(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);

    bool definite = true;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational pivot = w[k][k];
        if (pivot < 0) return Definiteness::indefinite;
        if (pivot == 0) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (w[k][j] != 0) return Definiteness::indefinite;
            definite = false;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w[i][k] == 0) continue;
            const Rational factor = w[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) w[i][j] -= factor * w[k][j];
        }
    }
    return definite ? Definiteness::positive_definite : Definiteness::positive_semidefinite;
}

}  // namespace singlat
