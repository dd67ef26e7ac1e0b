#pragma once

#include "singlat/cycle.hpp"
#include "singlat/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fixtures {

// E_0 is the (-13)-curve, E_5 and E_6 the (-1)-nodes.
inline constexpr std::string_view kGamma = R"(# two (-1)-nodes around a (-13)-curve
vertex E_0 -13
vertex E_1 -3
vertex E_2 -2
vertex E_3 -2
vertex E_4 -3
vertex E_5 -1
vertex E_6 -1
edge E_0 E_5
edge E_0 E_6
edge E_1 E_6
edge E_2 E_6
edge E_3 E_5
edge E_4 E_5
)";

// Arms of length 2, 1, 4 around the center c; Z_min = (2,3,4,6,5,4,3,2).
inline constexpr std::string_view kE8 = R"(vertex a2 -2
vertex b1 -2
vertex a1 -2
vertex c -2
vertex d1 -2
vertex d2 -2
vertex d3 -2
vertex d4 -2
edge a2 a1
edge a1 c
edge b1 c
edge c d1
edge d1 d2
edge d2 d3
edge d3 d4
)";

// Minimally elliptic star: center -1, arms -2, -3, -7.
inline constexpr std::string_view kStar237 = R"(vertex c -1
vertex p -2
vertex q -3
vertex r -7
edge c p
edge c q
edge c r
)";

inline singlat::ResolutionGraph gamma() { return singlat::parse_graph(kGamma); }
inline singlat::ResolutionGraph e8() { return singlat::parse_graph(kE8); }
inline singlat::ResolutionGraph star237() { return singlat::parse_graph(kStar237); }

inline singlat::ResolutionGraph single(long euler) {
    return singlat::ResolutionGraph({{"a", euler, 0}}, {});
}

/// Chain of (-2)-vertices v0 - v1 - ... .
inline singlat::ResolutionGraph chain(const std::vector<long>& eulers) {
    std::vector<singlat::Vertex> vs;
    std::vector<singlat::Edge> es;
    for (std::size_t i = 0; i < eulers.size(); ++i) {
        vs.push_back({"v" + std::to_string(i), eulers[i], 0});
        if (i) es.emplace_back(i - 1, i);
    }
    return singlat::ResolutionGraph(std::move(vs), std::move(es));
}

inline singlat::Cycle cyc(std::vector<long> c) { return singlat::Cycle::from_integers(c); }

}  // namespace fixtures
