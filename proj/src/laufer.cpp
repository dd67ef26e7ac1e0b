#include "singlat/laufer.hpp"

#include <algorithm>
#include <numeric>

namespace singlat {

std::size_t ComputationSequence::simple_jumps() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const SequenceStep& s) { return s.value == 2; }));
}

std::vector<std::size_t> ComputationSequence::vertices() const {
    std::vector<std::size_t> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.vertex);
    return out;
}

ComputationSequence score_sequence(const Lattice& lat, const Cycle& start, std::span<const std::size_t> vertices) {
    if (start.size() != lat.size()) throw Error("start cycle has wrong length");
    if (!start.is_integral()) throw Error("computation sequences start from an integral cycle");
    auto current = start.to_longs();
    ComputationSequence seq;
    seq.start = start;
    seq.steps.reserve(vertices.size());
    for (auto v : vertices) {
        if (v >= lat.size()) throw Error("vertex index out of range in sequence");
        const long value = lat.pairing_with_vertex(v, current);
        seq.steps.push_back({v, value});
        seq.cost += std::max(0L, value - 1);
        ++current[v];
    }
    seq.end = Cycle::from_integers(current);
    return seq;
}

namespace {

std::vector<std::size_t> resolve_priority(const Lattice& lat, std::span<const std::size_t> priority) {
    std::vector<std::size_t> order(lat.size());
    if (priority.empty()) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        return order;
    }
    order.assign(priority.begin(), priority.end());
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> identity(lat.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    if (sorted != identity) throw Error("priority must be a permutation of the vertices");
    return order;
}

}  // namespace

ComputationSequence laufer_sequence(const Lattice& lat, const Cycle& start, std::span<const std::size_t> priority) {
    lat.require_negative_definite();
    if (!start.is_integral()) throw Error("Laufer sequences start from an integral cycle");
    const auto order = resolve_priority(lat, priority);
    auto current = start.to_longs();
    std::vector<std::size_t> added;
    for (;;) {
        auto next = std::find_if(order.begin(), order.end(),
                                 [&](std::size_t j) { return lat.pairing_with_vertex(j, current) > 0; });
        if (next == order.end()) break;
        added.push_back(*next);
        ++current[*next];
    }
    return score_sequence(lat, start, added);
}

ArtinResult artin_cycle(const Lattice& lat, std::size_t base, std::span<const std::size_t> priority) {
    lat.require_negative_definite();
    if (base >= lat.size()) throw Error("base vertex out of range");
    const auto closure = laufer_sequence(lat, Cycle::basis(lat.size(), base), priority);
    std::vector<std::size_t> all{base};
    const auto rest = closure.vertices();
    all.insert(all.end(), rest.begin(), rest.end());
    auto seq = score_sequence(lat, Cycle(lat.size()), all);
    return ArtinResult{seq.end, std::move(seq)};
}

ArtinResult artin_cycle(const Lattice& lat) { return artin_cycle(lat, 0, {}); }

Cycle antinef_closure(const Lattice& lat, const Cycle& d) {
    if (d.size() != lat.size()) throw Error("cycle has wrong length");
    if (!d.is_integral() || !d.is_effective()) throw Error("anti-nef closure needs an integral effective cycle");
    if (d.is_zero()) throw Error("anti-nef closure of the zero cycle is degenerate");
    return laufer_sequence(lat, d).end;
}

}  // namespace singlat
