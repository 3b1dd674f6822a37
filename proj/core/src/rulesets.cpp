#include "placement/rulesets.hpp"

#include <algorithm>
#include <string>

namespace placement {

namespace {

bool has_neighbor_colored(const ColoredGraph& g, VertexId v, CellColor c) {
    for (VertexId w : g.neighbors(v)) {
        if (g.color(w) == c) return true;
    }
    return false;
}

bool component_alive(const ColoredGraph& g, VertexId v) {
    auto comp = same_color_component(g, v);
    return component_has_liberty(g, comp);
}

void require_uncolored(const ColoredGraph& g, VertexId v) {
    if (g.color(v) != CellColor::Uncolored) {
        throw Error("vertex " + std::to_string(v) + " is already colored");
    }
}

}  // namespace

std::string_view to_string(RulesetTag r) {
    switch (r) {
    case RulesetTag::Col: return "col";
    case RulesetTag::GraphNoGo: return "nogo";
    case RulesetTag::GraphFjords: return "fjords";
    case RulesetTag::Btcl: return "btcl";
    }
    return "?";
}

RulesetTag ruleset_from_string(std::string_view s) {
    if (s == "col") return RulesetTag::Col;
    if (s == "nogo") return RulesetTag::GraphNoGo;
    if (s == "fjords") return RulesetTag::GraphFjords;
    if (s == "btcl") return RulesetTag::Btcl;
    throw Error("unknown ruleset '" + std::string(s) + "'");
}

bool is_placement(RulesetTag r) { return r != RulesetTag::Btcl; }

bool col_legal(const ColoredGraph& g) {
    for (auto [u, v] : g.edges()) {
        if (g.color(u) != CellColor::Uncolored && g.color(u) == g.color(v)) return false;
    }
    return true;
}

std::vector<VertexId> col_moves(const ColoredGraph& g, PlayerColor p) {
    if (!col_legal(g)) throw Error("board is not a legal Col position");
    const CellColor mine = cell_of(p);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.color(v) == CellColor::Uncolored && !has_neighbor_colored(g, v, mine)) {
            out.push_back(v);
        }
    }
    return out;
}

bool nogo_legal(const ColoredGraph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (seen[v] || g.color(v) == CellColor::Uncolored) continue;
        auto comp = same_color_component(g, v);
        for (VertexId w : comp) seen[w] = 1;
        if (!component_has_liberty(g, comp)) return false;
    }
    return true;
}

std::vector<VertexId> nogo_moves(const ColoredGraph& g, PlayerColor p) {
    if (!nogo_legal(g)) throw Error("board is not a legal Graph-NoGo position");
    const CellColor theirs = cell_of(opponent(p));
    std::vector<VertexId> out;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (g.color(x) != CellColor::Uncolored) continue;
        // Only components touching x can lose a liberty.
        const ColoredGraph next = g.with_color(x, cell_of(p));
        bool ok = component_alive(next, x);
        for (VertexId w : next.neighbors(x)) {
            if (!ok) break;
            if (next.color(w) == theirs) ok = component_alive(next, w);
        }
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<VertexId> fjords_moves(const ColoredGraph& g, PlayerColor p) {
    const CellColor mine = cell_of(p);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.color(v) == CellColor::Uncolored && has_neighbor_colored(g, v, mine)) {
            out.push_back(v);
        }
    }
    return out;
}

bool board_legal(RulesetTag r, const ColoredGraph& g) {
    switch (r) {
    case RulesetTag::Col: return col_legal(g);
    case RulesetTag::GraphNoGo: return nogo_legal(g);
    case RulesetTag::GraphFjords: return true;
    case RulesetTag::Btcl: break;
    }
    throw Error("BTCL is not a placement ruleset");
}

std::vector<VertexId> placement_moves(RulesetTag r, const ColoredGraph& g, PlayerColor p) {
    switch (r) {
    case RulesetTag::Col: return col_moves(g, p);
    case RulesetTag::GraphNoGo: return nogo_moves(g, p);
    case RulesetTag::GraphFjords: return fjords_moves(g, p);
    case RulesetTag::Btcl: break;
    }
    throw Error("BTCL is not a placement ruleset");
}

ColoredGraph apply_placement(const ColoredGraph& g, VertexId v, PlayerColor p) {
    require_uncolored(g, v);
    return g.with_color(v, cell_of(p));
}

ColoredGraph apply_placement(RulesetTag r, const ColoredGraph& g, VertexId v, PlayerColor p) {
    require_uncolored(g, v);
    auto moves = placement_moves(r, g, p);
    if (!std::binary_search(moves.begin(), moves.end(), v)) {
        throw Error("vertex " + std::to_string(v) + " is not a legal " +
                    std::string(to_string(r)) + " move for " + to_char(p));
    }
    return g.with_color(v, cell_of(p));
}

Position Position::placement(RulesetTag r, ColoredGraph g) {
    if (!is_placement(r)) throw Error("BTCL positions need a machine");
    return Position{r, std::move(g)};
}

Position Position::btcl(BtclMachine m) { return Position{RulesetTag::Btcl, std::move(m)}; }

const ColoredGraph& Position::board() const {
    if (auto* g = std::get_if<ColoredGraph>(&state)) return *g;
    throw Error("position holds a BTCL machine, not a board");
}

const BtclMachine& Position::machine() const {
    if (auto* m = std::get_if<BtclMachine>(&state)) return *m;
    throw Error("position holds a board, not a BTCL machine");
}

void Position::validate() const {
    if (ruleset == RulesetTag::Btcl) {
        if (!btcl_legal(machine())) throw Error("BTCL orientation is not legal");
        return;
    }
    if (!board_legal(ruleset, board())) {
        throw Error("board is not a legal " + std::string(to_string(ruleset)) + " position");
    }
}

std::vector<Move> legal_moves(const Position& pos, PlayerColor p) {
    std::vector<Move> out;
    if (pos.ruleset == RulesetTag::Btcl) {
        for (auto mv : btcl_moves(pos.machine(), p)) out.emplace_back(mv);
    } else {
        for (auto v : placement_moves(pos.ruleset, pos.board(), p)) out.emplace_back(v);
    }
    return out;
}

Position apply_move(const Position& pos, PlayerColor p, const Move& mv) {
    if (pos.ruleset == RulesetTag::Btcl) {
        return Position::btcl(btcl_apply(pos.machine(), p, std::get<BtclMove>(mv)));
    }
    return Position::placement(pos.ruleset,
                               apply_placement(pos.ruleset, pos.board(), std::get<VertexId>(mv), p));
}

}  // namespace placement
