#include "placement/reductions.hpp"

#include "placement/rulesets.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace placement {

namespace {

constexpr std::array<std::string_view, 7> kRoleNames = {
    "B", "W", "F", "A", "EdgeB", "EdgeW", "GadgetInternal",
};

}  // namespace

std::string_view to_string(ImageRole r) { return kRoleNames[static_cast<std::size_t>(r)]; }

ImageRole image_role_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kRoleNames.size(); ++i) {
        if (kRoleNames[i] == s) return static_cast<ImageRole>(i);
    }
    throw Error("unknown image role '" + std::string(s) + "'");
}

std::vector<VertexId> ReductionMap::vertices_with(ImageRole r) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < roles.size(); ++v) {
        if (roles[v] == r) out.push_back(v);
    }
    return out;
}

void ReductionMap::validate(std::size_t image_vertex_count) const {
    if (roles.size() != image_vertex_count) {
        throw Error("reduction map assigns roles to " + std::to_string(roles.size()) +
                    " vertices but the image has " + std::to_string(image_vertex_count));
    }
    for (auto [src, img] : source_to_image) {
        if (img >= image_vertex_count) {
            throw Error("source vertex " + std::to_string(src) + " maps outside the image");
        }
    }
}

std::string serialize_reduction_map(const ReductionMap& map) {
    std::ostringstream out;
    for (auto [src, img] : map.source_to_image) out << "m " << src << ' ' << img << '\n';
    for (VertexId v = 0; v < map.roles.size(); ++v) out << "r " << v << ' ' << to_string(map.roles[v]) << '\n';
    return out.str();
}

ReductionMap parse_reduction_map(std::string_view text) {
    ReductionMap map;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw Error("map line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;
        if (tag == "m") {
            VertexId src = 0, img = 0;
            if (!(fields >> src >> img)) fail("expected 'm <source> <image>'");
            if (!map.source_to_image.emplace(src, img).second) fail("source mapped twice");
        } else if (tag == "r") {
            VertexId v = 0;
            std::string role;
            if (!(fields >> v >> role)) fail("expected 'r <image> <role>'");
            if (v != map.roles.size()) fail("role lines must list image vertices in order");
            map.roles.push_back(image_role_from_string(role));
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    return map;
}

Reduction reduce_col_to_nogo(const ColoredGraph& g) {
    if (!col_legal(g)) throw Error("Col to NoGo reduction needs a legal Col position");
    const std::size_t n = g.vertex_count();
    const std::size_t image_n = 4 * n + 2 * g.edge_count();
    auto vb = [](VertexId v) { return 4 * v; };
    auto vw = [](VertexId v) { return 4 * v + 1; };
    auto vf = [](VertexId v) { return 4 * v + 2; };
    auto va = [](VertexId v) { return 4 * v + 3; };

    std::vector<Edge> edges;
    edges.reserve(3 * n + 4 * g.edge_count());
    std::vector<CellColor> coloring(image_n, CellColor::Uncolored);
    ReductionMap map;
    map.roles.resize(image_n);

    for (VertexId v = 0; v < n; ++v) {
        edges.emplace_back(vb(v), vf(v));
        edges.emplace_back(vw(v), vf(v));
        edges.emplace_back(vf(v), va(v));
        coloring[vb(v)] = CellColor::LeftOwned;
        coloring[vw(v)] = CellColor::RightOwned;
        // Blue maps to black and red to white: both are the same player.
        coloring[va(v)] = g.color(v);
        map.roles[vb(v)] = ImageRole::B;
        map.roles[vw(v)] = ImageRole::W;
        map.roles[vf(v)] = ImageRole::F;
        map.roles[va(v)] = ImageRole::A;
        map.source_to_image[v] = va(v);
    }
    VertexId next = static_cast<VertexId>(4 * n);
    for (auto [x, y] : g.edges()) {
        const VertexId eb = next++, ew = next++;
        edges.emplace_back(va(x), eb);
        edges.emplace_back(va(x), ew);
        edges.emplace_back(va(y), eb);
        edges.emplace_back(va(y), ew);
        coloring[eb] = CellColor::LeftOwned;
        coloring[ew] = CellColor::RightOwned;
        map.roles[eb] = ImageRole::EdgeB;
        map.roles[ew] = ImageRole::EdgeW;
    }
    return {ColoredGraph(image_n, edges, std::move(coloring)), std::move(map)};
}

}  // namespace placement
