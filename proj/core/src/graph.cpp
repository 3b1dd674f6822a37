#include "placement/graph.hpp"

#include <algorithm>

namespace placement {

char to_char(PlayerColor p) { return p == PlayerColor::Left ? 'L' : 'R'; }

PlayerColor player_from_char(char c) {
    switch (c) {
    case 'L': case 'l': return PlayerColor::Left;
    case 'R': case 'r': return PlayerColor::Right;
    default: throw Error(std::string("unknown player '") + c + "'");
    }
}

ColoredGraph::ColoredGraph() : structure_(std::make_shared<const Structure>()) {}

ColoredGraph::ColoredGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : ColoredGraph(vertex_count, edges,
                   std::vector<CellColor>(vertex_count, CellColor::Uncolored)) {}

ColoredGraph::ColoredGraph(std::size_t vertex_count, std::span<const Edge> edges,
                           std::vector<CellColor> coloring)
    : coloring_(std::move(coloring)) {
    if (coloring_.size() != vertex_count) {
        throw Error("coloring size does not match vertex count");
    }
    Structure s;
    s.adjacency.resize(vertex_count);
    s.edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range");
        }
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        s.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(s.edges.begin(), s.edges.end());
    if (auto dup = std::adjacent_find(s.edges.begin(), s.edges.end()); dup != s.edges.end()) {
        throw Error("parallel edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
    }
    for (auto [u, v] : s.edges) {
        s.adjacency[u].push_back(v);
        s.adjacency[v].push_back(u);
    }
    for (auto& adj : s.adjacency) std::sort(adj.begin(), adj.end());
    structure_ = std::make_shared<const Structure>(std::move(s));
}

void ColoredGraph::check_vertex(VertexId v) const {
    if (v >= vertex_count()) {
        throw Error("vertex " + std::to_string(v) + " out of range (n=" +
                    std::to_string(vertex_count()) + ")");
    }
}

std::span<const VertexId> ColoredGraph::neighbors(VertexId v) const {
    check_vertex(v);
    return structure_->adjacency[v];
}

bool ColoredGraph::adjacent(VertexId v, VertexId w) const {
    auto adj = neighbors(v);
    return std::binary_search(adj.begin(), adj.end(), w);
}

CellColor ColoredGraph::color(VertexId v) const {
    check_vertex(v);
    return coloring_[v];
}

ColoredGraph ColoredGraph::with_color(VertexId v, CellColor c) const {
    check_vertex(v);
    ColoredGraph out = *this;
    out.coloring_[v] = c;
    return out;
}

ColoredGraph ColoredGraph::with_coloring(std::vector<CellColor> coloring) const {
    if (coloring.size() != vertex_count()) throw Error("coloring size mismatch");
    ColoredGraph out = *this;
    out.coloring_ = std::move(coloring);
    return out;
}

ColoredGraph ColoredGraph::color_swapped() const {
    ColoredGraph out = *this;
    for (auto& c : out.coloring_) c = swapped(c);
    return out;
}

std::size_t ColoredGraph::uncolored_count() const {
    return static_cast<std::size_t>(
        std::count(coloring_.begin(), coloring_.end(), CellColor::Uncolored));
}

bool ColoredGraph::same_structure(const ColoredGraph& other) const {
    return structure_ == other.structure_ ||
           (vertex_count() == other.vertex_count() &&
            structure_->edges == other.structure_->edges);
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.same_structure(b) && a.coloring_ == b.coloring_;
}

std::vector<VertexId> neighbors(const ColoredGraph& g, VertexId v) {
    auto adj = g.neighbors(v);
    return {adj.begin(), adj.end()};
}

std::vector<VertexId> same_color_component(const ColoredGraph& g, VertexId v) {
    const CellColor c = g.color(v);
    if (c == CellColor::Uncolored) {
        throw Error("vertex " + std::to_string(v) + " is uncolored; components need a player color");
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> comp{v};
    seen[v] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
        for (VertexId w : g.neighbors(comp[head])) {
            if (!seen[w] && g.color(w) == c) {
                seen[w] = 1;
                comp.push_back(w);
            }
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

bool component_has_liberty(const ColoredGraph& g, std::span<const VertexId> comp) {
    for (VertexId v : comp) {
        for (VertexId w : g.neighbors(v)) {
            if (g.color(w) == CellColor::Uncolored &&
                std::find(comp.begin(), comp.end(), w) == comp.end()) {
                return true;
            }
        }
    }
    return false;
}

bool euler_bound_check(const ColoredGraph& g) {
    const std::size_t n = g.vertex_count();
    return n < 3 || g.edge_count() <= 3 * n - 6;
}

}  // namespace placement
