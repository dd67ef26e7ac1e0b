#pragma once

// Path(Z): the least cost S(gamma) of a monotone computation sequence from 0
// to Z, and Path(Gamma), the resulting upper bound for the geometric genus.

#include "singlat/chi.hpp"
#include "singlat/cycle.hpp"
#include "singlat/laufer.hpp"

#include <cstdint>
#include <optional>

namespace singlat {

struct PathOptions {
    /// Largest state cube (product of coefficient ranges) the search accepts.
    std::uint64_t state_limit = 100'000'000;
};

struct PathResult {
    long value = 0;
    ComputationSequence witness;  // from 0 to end_cycle, cost == value
    Cycle end_cycle;
    std::uint64_t states_expanded = 0;
};

/// Least-cost search over {l : 0 <= l <= z} with edges l -> l + E_i of cost
/// max{0, (E_i, l) - 1}. The witness is the lexicographically least vertex
/// sequence among optimal ones. Requires z integral and effective and every
/// vertex rational.
PathResult path_value(const Lattice& lat, const Cycle& z, const PathOptions& options = {});

/// Path(Gamma) = min over Z >= floor(Z_K) of Path(Z). With Z_K integral and
/// effective this is Path(Z_K) and `cap` is ignored. Otherwise the minimum is
/// taken over floor(Z_K) <= Z <= cap (negative parts of floor(Z_K) clamped to
/// 0) and a cap is mandatory.
PathResult path_gamma(const Lattice& lat, const std::optional<Cycle>& cap = std::nullopt,
                      const PathOptions& options = {});

struct BoundsReport {
    Integer min_chi;
    Integer pg_lower;  // 1 - min chi, valid when p_g > 0
    long path_gamma = 0;
    long pg_upper = 0;
    Integer gap;  // pg_upper - pg_lower, reported as is
};

BoundsReport bounds_report(const Lattice& lat, const std::optional<Cycle>& cap = std::nullopt,
                           const PathOptions& options = {});

}  // namespace singlat
