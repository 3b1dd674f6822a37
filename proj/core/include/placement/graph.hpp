#ifndef PLACEMENT_GRAPH_HPP
#define PLACEMENT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace placement {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PlayerColor : std::uint8_t { Left, Right };

enum class CellColor : std::uint8_t { Uncolored, LeftOwned, RightOwned };

constexpr PlayerColor opponent(PlayerColor p) {
    return p == PlayerColor::Left ? PlayerColor::Right : PlayerColor::Left;
}

constexpr CellColor cell_of(PlayerColor p) {
    return p == PlayerColor::Left ? CellColor::LeftOwned : CellColor::RightOwned;
}

constexpr CellColor swapped(CellColor c) {
    switch (c) {
    case CellColor::LeftOwned: return CellColor::RightOwned;
    case CellColor::RightOwned: return CellColor::LeftOwned;
    default: return c;
    }
}

char to_char(PlayerColor p);
PlayerColor player_from_char(char c);

/**
 * Undirected simple graph with a three-way vertex coloring.
 *
 * The structure (vertex count and adjacency) is immutable and shared between
 * copies; only the coloring is per-value. Placement moves never add or remove
 * edges, so `with_color` is cheap.
 */
class ColoredGraph {
public:
    ColoredGraph();

    /// Builds an uncolored graph. Rejects self-loops, parallel edges and
    /// out-of-range endpoints.
    ColoredGraph(std::size_t vertex_count, std::span<const Edge> edges);
    ColoredGraph(std::size_t vertex_count, std::span<const Edge> edges,
                 std::vector<CellColor> coloring);

    std::size_t vertex_count() const { return coloring_.size(); }
    std::size_t edge_count() const { return structure_->edges.size(); }

    /// Edges with `first < second`, sorted lexicographically.
    std::span<const Edge> edges() const { return structure_->edges; }

    std::span<const VertexId> neighbors(VertexId v) const;
    bool adjacent(VertexId v, VertexId w) const;

    CellColor color(VertexId v) const;
    std::span<const CellColor> coloring() const { return coloring_; }

    ColoredGraph with_color(VertexId v, CellColor c) const;
    ColoredGraph with_coloring(std::vector<CellColor> coloring) const;

    /// Same structure with Left and Right ownership exchanged.
    ColoredGraph color_swapped() const;

    std::size_t uncolored_count() const;

    bool same_structure(const ColoredGraph& other) const;
    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b);

private:
    struct Structure {
        std::vector<Edge> edges;
        std::vector<std::vector<VertexId>> adjacency;
    };

    void check_vertex(VertexId v) const;

    std::shared_ptr<const Structure> structure_;
    std::vector<CellColor> coloring_;
};

std::vector<VertexId> neighbors(const ColoredGraph& g, VertexId v);

/// Maximal connected set containing `v` whose vertices share v's color.
/// Throws if `v` is uncolored. Returned sorted.
std::vector<VertexId> same_color_component(const ColoredGraph& g, VertexId v);

/// True iff some vertex outside `comp` but adjacent to it is uncolored.
bool component_has_liberty(const ColoredGraph& g, std::span<const VertexId> comp);

/// Necessary condition for planarity: n < 3 or |E| <= 3n - 6.
bool euler_bound_check(const ColoredGraph& g);

}  // namespace placement

#endif
