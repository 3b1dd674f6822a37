#include "placement/btcl.hpp"

#include <array>
#include <string>

namespace placement {

namespace {

constexpr std::array<std::string_view, 8> kKindNames = {
    "unspecified", "variable", "goal", "and", "or", "choice", "split", "terminal",
};

bool flip_is_legal(const BtclMachine& m, std::size_t i) {
    const BtclArc& a = m.arc(i);
    // Reversing (tail, head) removes weight from head and adds it to tail.
    return btcl_in_weight(m, a.head) - a.weight >= 2;
}

}  // namespace

std::string_view to_string(VertexKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

VertexKind vertex_kind_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == s) return static_cast<VertexKind>(i);
    }
    throw Error("unknown vertex kind '" + std::string(s) + "'");
}

BtclMachine::BtclMachine(std::size_t vertex_count, std::vector<BtclArc> arcs,
                         std::size_t goal_arc, std::vector<VertexKind> kinds)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), goal_arc_(goal_arc),
      kinds_(std::move(kinds)) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const BtclArc& a = arcs_[i];
        if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
            throw Error("arc " + std::to_string(i) + " has an endpoint out of range");
        }
        if (a.tail == a.head) throw Error("arc " + std::to_string(i) + " is a self-loop");
        if (a.weight != 1 && a.weight != 2) {
            throw Error("arc " + std::to_string(i) + " has weight " + std::to_string(a.weight) +
                        "; weights are 1 or 2");
        }
        if (a.flipped) throw Error("arc " + std::to_string(i) + " starts flipped");
    }
    if (goal_arc_ >= arcs_.size()) throw Error("goal arc index out of range");
    if (arcs_[goal_arc_].owner != PlayerColor::Left) throw Error("goal arc must be owned by Left");
    if (!kinds_.empty() && kinds_.size() != vertex_count_) {
        throw Error("vertex kind annotation does not cover every vertex");
    }
    if (!btcl_legal(*this)) throw Error("initial orientation is not legal");
}

const BtclArc& BtclMachine::arc(std::size_t i) const {
    if (i >= arcs_.size()) throw Error("arc index " + std::to_string(i) + " out of range");
    return arcs_[i];
}

VertexKind BtclMachine::kind(VertexId v) const {
    if (v >= vertex_count_) throw Error("vertex out of range");
    return kinds_.empty() ? VertexKind::Unspecified : kinds_[v];
}

bool BtclMachine::game_over() const {
    return btcl_left_has_won(*this) || consecutive_passes_ >= 2;
}

int btcl_in_weight(const BtclMachine& m, VertexId v) {
    if (v >= m.vertex_count()) throw Error("vertex out of range");
    int w = 0;
    for (const BtclArc& a : m.arcs()) {
        if (a.head == v) w += a.weight;
    }
    return w;
}

bool btcl_legal(const BtclMachine& m) {
    std::vector<int> in(m.vertex_count(), 0);
    for (const BtclArc& a : m.arcs()) in[a.head] += a.weight;
    for (int w : in) {
        if (w < 2) return false;
    }
    return true;
}

std::vector<BtclMove> btcl_moves(const BtclMachine& m, PlayerColor p) {
    std::vector<BtclMove> out;
    if (m.game_over()) return out;
    for (std::size_t i = 0; i < m.arcs().size(); ++i) {
        const BtclArc& a = m.arcs()[i];
        if (a.owner == p && !a.flipped && flip_is_legal(m, i)) out.push_back(BtclMove::flip(i));
    }
    out.push_back(BtclMove::pass());
    return out;
}

BtclMachine btcl_apply(const BtclMachine& m, PlayerColor p, BtclMove mv) {
    if (m.game_over()) throw Error("game is already over");
    BtclMachine out = m;
    if (mv.is_pass()) {
        ++out.consecutive_passes_;
        return out;
    }
    const std::size_t i = *mv.arc;
    const BtclArc& a = m.arc(i);
    if (a.owner != p) throw Error("arc " + std::to_string(i) + " is not owned by the mover");
    if (a.flipped) throw Error("arc " + std::to_string(i) + " was already flipped");
    if (!flip_is_legal(m, i)) throw Error("flipping arc " + std::to_string(i) + " breaks legality");
    BtclArc& b = out.arcs_[i];
    std::swap(b.tail, b.head);
    b.flipped = true;
    out.consecutive_passes_ = 0;
    return out;
}

bool btcl_left_has_won(const BtclMachine& m) {
    return !m.arcs().empty() && m.arcs()[m.goal_arc()].flipped;
}

}  // namespace placement
