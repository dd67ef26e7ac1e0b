#pragma once

// Computation sequences: Laufer's algorithm for the Artin cycle, the anti-nef
// closure, and the cost S(gamma) of a monotone sequence.

#include "singlat/cycle.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace singlat {

struct SequenceStep {
    std::size_t vertex = 0;
    long value = 0;  // (E_{i(k)}, l_k), taken before the addition

    friend bool operator==(const SequenceStep&, const SequenceStep&) = default;
};

/// l_{k+1} = l_k + E_{i(k)}, replayed from `start` to `end`.
struct ComputationSequence {
    Cycle start;
    Cycle end;
    std::vector<SequenceStep> steps;
    long cost = 0;  // sum of max{0, value - 1}

    /// Steps with value exactly 2.
    std::size_t simple_jumps() const;
    std::vector<std::size_t> vertices() const;
};

/// Replays `vertices` from `start` and scores every step. `start` must be
/// integral.
ComputationSequence score_sequence(const Lattice& lat, const Cycle& start, std::span<const std::size_t> vertices);

/// Generalized Laufer loop: from `start`, add some E_j with (l, E_j) > 0 until
/// anti-nef. `priority` lists the order in which vertices are tried (all of
/// them, each once); empty means canonical order.
ComputationSequence laufer_sequence(const Lattice& lat, const Cycle& start,
                                    std::span<const std::size_t> priority = {});

struct ArtinResult {
    Cycle cycle;
    ComputationSequence sequence;  // from 0, first step adds the base vertex
};

/// Least nonzero effective anti-nef cycle, by Laufer's algorithm from the
/// vertex of lowest canonical index.
ArtinResult artin_cycle(const Lattice& lat);
/// Same, from an arbitrary base vertex and trial order.
ArtinResult artin_cycle(const Lattice& lat, std::size_t base, std::span<const std::size_t> priority);

/// Least anti-nef integral cycle >= d; d must be integral, effective, nonzero.
Cycle antinef_closure(const Lattice& lat, const Cycle& d);

}  // namespace singlat
