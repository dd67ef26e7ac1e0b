#include "singlat/path.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace singlat {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Mixed-radix encoding of the cube {l : 0 <= l <= upper}.
class StateCube {
public:
    StateCube(std::vector<long> upper, std::uint64_t limit) : upper_(std::move(upper)), stride_(upper_.size()) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < upper_.size(); ++i) {
            stride_[i] = count;
            const auto radix = static_cast<std::uint64_t>(upper_[i]) + 1;
            if (count > limit / radix)
                throw Error("path search needs more than " + std::to_string(limit) +
                            " states; raise the state limit or choose a smaller target");
            count *= radix;
        }
        count_ = count;
    }

    std::uint64_t count() const { return count_; }
    std::uint64_t stride(std::size_t i) const { return stride_[i]; }
    long upper(std::size_t i) const { return upper_[i]; }
    std::size_t dims() const { return upper_.size(); }

    void decode(std::uint64_t s, std::vector<long>& out) const {
        for (std::size_t i = 0; i < upper_.size(); ++i) {
            const auto radix = static_cast<std::uint64_t>(upper_[i]) + 1;
            out[i] = static_cast<long>(s % radix);
            s /= radix;
        }
    }

    std::uint64_t encode(const std::vector<long>& l) const {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < upper_.size(); ++i) s += static_cast<std::uint64_t>(l[i]) * stride_[i];
        return s;
    }

private:
    std::vector<long> upper_;
    std::vector<std::uint64_t> stride_;
    std::uint64_t count_ = 0;
};

std::uint32_t step_cost(long value) {
    const long c = std::max(0L, value - 1);
    if (c >= static_cast<long>(kUnreached)) throw Error("step cost out of range");
    return static_cast<std::uint32_t>(c);
}

// Backward Dijkstra from every state >= lower, then a greedy forward walk
// from 0 that picks the smallest vertex index still on an optimal path.
PathResult search(const Lattice& lat, const std::vector<long>& upper, const std::vector<long>& lower,
                  const PathOptions& options) {
    const std::size_t n = lat.size();
    const StateCube cube(upper, options.state_limit);
    std::vector<std::uint32_t> dist(cube.count(), kUnreached);

    using Entry = std::pair<std::uint32_t, std::uint64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

    // Seed with the sub-box [lower, upper].
    std::vector<long> l(lower);
    for (;;) {
        const auto s = cube.encode(l);
        dist[s] = 0;
        queue.push({0, s});
        std::size_t i = 0;
        while (i < n && l[i] == upper[i]) {
            l[i] = lower[i];
            ++i;
        }
        if (i == n) break;
        ++l[i];
    }

    PathResult result;
    bool origin_settled = false;
    std::uint32_t origin_dist = 0;
    while (!queue.empty()) {
        const auto [d, s] = queue.top();
        if (origin_settled && d > origin_dist) break;
        queue.pop();
        if (d != dist[s]) continue;
        ++result.states_expanded;
        if (s == 0) {
            origin_settled = true;
            origin_dist = d;
        }
        cube.decode(s, l);
        for (std::size_t i = 0; i < n; ++i) {
            if (l[i] == 0) continue;
            // Predecessor l - E_i; the step adds E_i to it.
            const long value = lat.pairing_with_vertex(i, l) - lat.graph().vertex(i).euler;
            const auto nd = d + step_cost(value);
            const auto p = s - cube.stride(i);
            if (nd < dist[p]) {
                dist[p] = nd;
                queue.push({nd, p});
            }
        }
    }
    if (!origin_settled) throw Error("internal: path search did not reach the zero cycle");

    auto is_target = [&](const std::vector<long>& c) {
        for (std::size_t i = 0; i < n; ++i)
            if (c[i] < lower[i]) return false;
        return true;
    };
    std::vector<std::size_t> order;
    std::fill(l.begin(), l.end(), 0);
    std::uint64_t s = 0;
    while (!is_target(l)) {
        bool moved = false;
        for (std::size_t i = 0; i < n && !moved; ++i) {
            if (l[i] == upper[i]) continue;
            const auto next = s + cube.stride(i);
            if (dist[next] == kUnreached) continue;
            if (step_cost(lat.pairing_with_vertex(i, l)) + dist[next] == dist[s]) {
                order.push_back(i);
                ++l[i];
                s = next;
                moved = true;
            }
        }
        if (!moved) throw Error("internal: optimal path reconstruction failed");
    }

    result.witness = score_sequence(lat, Cycle(n), order);
    result.value = result.witness.cost;
    result.end_cycle = result.witness.end;
    if (result.value != static_cast<long>(origin_dist)) throw Error("internal: witness cost disagrees with search");
    return result;
}

void require_rational(const Lattice& lat) {
    if (!lat.graph().all_rational()) throw Error("path computations require every vertex to have genus 0");
}

}  // namespace

PathResult path_value(const Lattice& lat, const Cycle& z, const PathOptions& options) {
    require_rational(lat);
    if (z.size() != lat.size()) throw Error("target cycle has wrong length");
    if (!z.is_integral() || !z.is_effective()) throw Error("path target must be integral and effective");
    const auto target = z.to_longs();
    return search(lat, target, target, options);
}

PathResult path_gamma(const Lattice& lat, const std::optional<Cycle>& cap, const PathOptions& options) {
    require_rational(lat);
    const auto& zk = lat.canonical_cycle();
    if (zk.is_integral() && zk.is_effective()) return path_value(lat, zk, options);
    if (!cap)
        throw Error("Z_K is not an effective integral cycle; Path(Gamma) needs an explicit --cap");
    if (cap->size() != lat.size()) throw Error("cap cycle has wrong length");
    if (!cap->is_integral() || !cap->is_effective()) throw Error("cap must be integral and effective");
    const auto upper = cap->to_longs();
    auto lower = zk.floor().to_longs();
    for (std::size_t i = 0; i < lower.size(); ++i) {
        lower[i] = std::max(0L, lower[i]);
        if (lower[i] > upper[i]) throw Error("cap is not >= floor(Z_K)");
    }
    return search(lat, upper, lower, options);
}

BoundsReport bounds_report(const Lattice& lat, const std::optional<Cycle>& cap, const PathOptions& options) {
    BoundsReport r;
    r.min_chi = min_chi(lat).min_chi;
    r.pg_lower = 1 - r.min_chi;
    r.path_gamma = path_gamma(lat, cap, options).value;
    r.pg_upper = r.path_gamma;
    r.gap = Integer(r.pg_upper) - r.pg_lower;
    return r;
}

}  // namespace singlat
