#include "singlat/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

namespace singlat {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

ResolutionGraph::ResolutionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
    if (vertices_.empty()) throw Error("graph has no vertices");
    std::set<std::string_view> ids;
    for (const auto& v : vertices_) {
        if (v.id.empty()) throw Error("empty vertex id");
        // ':' ',' '=' delimit cycle literals and CLI flags.
        if (v.id.find_first_of(":,= \t") != std::string::npos)
            throw Error("vertex id '" + v.id + "' contains a reserved character");
        if (!ids.insert(v.id).second) throw Error("duplicate vertex id '" + v.id + "'");
        if (v.genus < 0) throw Error("negative genus at vertex '" + v.id + "'");
    }
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertices_.size() || b >= vertices_.size()) throw Error("edge endpoint out of range");
        if (a == b) throw Error("self-loop at vertex '" + vertices_[a].id + "'");
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second)
            throw Error("duplicate edge '" + vertices_[a].id + "' -- '" + vertices_[b].id + "'");
        edges_.emplace_back(a, b);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    std::vector<bool> reached(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adjacency_[v])
            if (!reached[w]) {
                reached[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != vertices_.size()) throw Error("graph is disconnected");
}

std::optional<std::size_t> ResolutionGraph::find(std::string_view id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    return std::nullopt;
}

std::size_t ResolutionGraph::index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw Error("unknown vertex '" + std::string(id) + "'");
}

bool ResolutionGraph::all_rational() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.genus == 0; });
}

bool operator==(const ResolutionGraph& a, const ResolutionGraph& b) {
    if (a.vertices_ != b.vertices_) return false;
    auto ea = a.edges_;
    auto eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) words.push_back(line.substr(start, i - start));
    }
    return words;
}

bool parse_long(std::string_view s, long& out) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end && !s.empty();
}

}  // namespace

ResolutionGraph parse_graph(std::string_view text) {
    std::vector<Vertex> vertices;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty()) continue;

        if (words[0] == "vertex") {
            if (words.size() < 3 || words.size() > 4)
                throw ParseError(line_no, "expected 'vertex <id> <euler> [genus=<g>]'");
            Vertex v;
            v.id = std::string(words[1]);
            if (!parse_long(words[2], v.euler))
                throw ParseError(line_no, "invalid Euler number '" + std::string(words[2]) + "'");
            if (words.size() == 4) {
                constexpr std::string_view prefix = "genus=";
                if (words[3].substr(0, prefix.size()) != prefix ||
                    !parse_long(words[3].substr(prefix.size()), v.genus))
                    throw ParseError(line_no, "expected 'genus=<int>', got '" + std::string(words[3]) + "'");
                if (v.genus < 0) throw ParseError(line_no, "negative genus");
            }
            if (index.count(v.id)) throw ParseError(line_no, "duplicate vertex id '" + v.id + "'");
            index.emplace(v.id, vertices.size());
            vertices.push_back(std::move(v));
        } else if (words[0] == "edge") {
            if (words.size() != 3) throw ParseError(line_no, "expected 'edge <id> <id>'");
            std::size_t ends[2];
            for (int k = 0; k < 2; ++k) {
                auto it = index.find(std::string(words[1 + k]));
                if (it == index.end())
                    throw ParseError(line_no, "dangling edge: unknown vertex '" + std::string(words[1 + k]) + "'");
                ends[k] = it->second;
            }
            if (ends[0] == ends[1]) throw ParseError(line_no, "self-loop at '" + std::string(words[1]) + "'");
            const Edge e{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
            if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
            edges.push_back(e);
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
        }
    }
    try {
        return ResolutionGraph(std::move(vertices), std::move(edges));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_graph(const ResolutionGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices()) {
        out << "vertex " << v.id << ' ' << v.euler;
        if (v.genus != 0) out << " genus=" << v.genus;
        out << '\n';
    }
    for (const auto& [a, b] : g.edges()) out << "edge " << g.vertex(a).id << ' ' << g.vertex(b).id << '\n';
    return out.str();
}

IntMatrix intersection_matrix(const ResolutionGraph& g) {
    IntMatrix m(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g.vertex(i).euler;
    for (const auto& [a, b] : g.edges()) {
        m(a, b) = 1;
        m(b, a) = 1;
    }
    return m;
}

DefinitenessReport definiteness(const ResolutionGraph& g) {
    const auto neg = intersection_matrix(g).negated();
    DefinitenessReport r;
    r.det_neg_m = determinant(neg);
    switch (classify_symmetric(neg)) {
        case Definiteness::positive_definite:
            r.negative_definite = true;
            r.negative_semidefinite = true;
            break;
        case Definiteness::positive_semidefinite:
            r.negative_semidefinite = true;
            break;
        case Definiteness::indefinite:
            break;
    }
    return r;
}

ResolutionGraph extend_with_minus_one(const ResolutionGraph& g, std::string_view attach) {
    const auto at = g.index_of(attach);
    std::string fresh = std::to_string(g.size());
    while (g.find(fresh)) fresh += '\'';
    auto vertices = g.vertices();
    vertices.push_back(Vertex{fresh, -1, 0});
    auto edges = g.edges();
    edges.emplace_back(at, g.size());
    return ResolutionGraph(std::move(vertices), std::move(edges));
}

MinimalityReport is_minimal_good(const ResolutionGraph& g) {
    MinimalityReport r;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertex(i);
        if (v.genus == 0 && v.euler == -1 && g.valence(i) <= 2) r.contractible.push_back(v.id);
    }
    r.minimal = r.contractible.empty();
    return r;
}

}  // namespace singlat
