#pragma once

// Small dense exact linear algebra: fraction-free (Bareiss) determinant and
// solver, and the exact symmetric elimination used for definiteness tests.

#include "singlat/exact.hpp"

#include <cstddef>
#include <vector>

namespace singlat {

/// Row-major square matrix over Integer.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    IntMatrix negated() const;
    /// Principal submatrix on the given (sorted or not) index list.
    IntMatrix principal(const std::vector<std::size_t>& rows) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Integer> data_;
};

/// Bareiss fraction-free determinant. The empty matrix has determinant 1.
Integer determinant(const IntMatrix& a);

/// Solves a * x = b for every column b of `rhs` (each of length n).
/// Forward elimination is fraction-free; back substitution is over Q.
/// Throws Error when a is singular.
std::vector<std::vector<Rational>> solve(const IntMatrix& a,
                                         const std::vector<std::vector<Integer>>& rhs);

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

/// Exact symmetric (LDL^T) elimination on a symmetric matrix. A zero pivot is
/// accepted only when the rest of its row is zero as well.
Definiteness classify_symmetric(const IntMatrix& a);

}  // namespace singlat
