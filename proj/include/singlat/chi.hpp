#pragma once

// Global minimum of chi over the lattice, the arithmetic genus, and the
// resulting conditional lower bound for the geometric genus.

#include "singlat/cycle.hpp"

#include <cstdint>

namespace singlat {

struct ChiMinResult {
    Integer min_chi;
    Cycle minimizer;  // lexicographically least among all minimizers
    std::uint64_t candidates_scanned = 0;
};

/// chi(l) = q(l - Z_K/2)/2 - q(Z_K/2)/2 with q(x) = -(x, x) positive definite,
/// so minimizing chi is a closest-vector problem around Z_K/2. Solved by exact
/// Fincke-Pohst enumeration seeded with the rounding of Z_K/2 (ties to floor).
/// The minimum is over all integral cycles, effective or not.
ChiMinResult min_chi(const Lattice& lat);

/// 1 - min chi.
Integer arithmetic_genus(const Lattice& lat);

/// 1 - min chi; a lower bound for p_g only when p_g > 0. Not clamped.
Integer pg_lower_bound(const Lattice& lat);

}  // namespace singlat
