#ifndef PLACEMENT_SRC_FRAGMENT_HPP
#define PLACEMENT_SRC_FRAGMENT_HPP

#include "placement/reductions.hpp"

#include <vector>

namespace placement::detail {

/// Incremental builder for gadget graphs and assembled images.
class FragmentBuilder {
public:
    VertexId vertex(CellColor c = CellColor::Uncolored, ImageRole role = ImageRole::GadgetInternal) {
        coloring_.push_back(c);
        roles_.push_back(role);
        return static_cast<VertexId>(coloring_.size() - 1);
    }

    void edge(VertexId u, VertexId v) { edges_.emplace_back(u, v); }

    /// Adds every edge of the clique on `vs`.
    void clique(const std::vector<VertexId>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
        }
    }

    void set_color(VertexId v, CellColor c) { coloring_[v] = c; }
    void set_role(VertexId v, ImageRole r) { roles_[v] = r; }

    std::size_t size() const { return coloring_.size(); }

    ColoredGraph graph() const { return ColoredGraph(coloring_.size(), edges_, coloring_); }

    ReductionMap map(std::map<VertexId, VertexId> source_to_image) const {
        ReductionMap m;
        m.source_to_image = std::move(source_to_image);
        m.roles = roles_;
        for (VertexId v = 0; v < roles_.size(); ++v) {
            if (coloring_[v] == CellColor::LeftOwned && m.roles[v] == ImageRole::GadgetInternal) {
                m.roles[v] = ImageRole::B;
            }
            if (coloring_[v] == CellColor::RightOwned && m.roles[v] == ImageRole::GadgetInternal) {
                m.roles[v] = ImageRole::W;
            }
        }
        return m;
    }

private:
    std::vector<Edge> edges_;
    std::vector<CellColor> coloring_;
    std::vector<ImageRole> roles_;
};

}  // namespace placement::detail

#endif
