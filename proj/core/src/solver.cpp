#include "placement/solver.hpp"

#include "placement/text_format.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace placement {

std::string_view to_string(OutcomeClass c) {
    switch (c) {
    case OutcomeClass::L: return "L";
    case OutcomeClass::R: return "R";
    case OutcomeClass::N: return "N";
    case OutcomeClass::P: return "P";
    }
    return "?";
}

OutcomeClass outcome_from_winners(PlayerColor left_first, PlayerColor right_first) {
    if (left_first == PlayerColor::Left) {
        return right_first == PlayerColor::Left ? OutcomeClass::L : OutcomeClass::N;
    }
    return right_first == PlayerColor::Right ? OutcomeClass::R : OutcomeClass::P;
}

OutcomeClass mirrored(OutcomeClass c) {
    if (c == OutcomeClass::L) return OutcomeClass::R;
    if (c == OutcomeClass::R) return OutcomeClass::L;
    return c;
}

namespace {

constexpr std::uint8_t kUncolored = 0;
constexpr std::uint8_t kFrozen = 3;

std::uint8_t code_of(PlayerColor p) { return p == PlayerColor::Left ? 1 : 2; }

/// Concurrent-safe memo. Entries are idempotent: every writer of a key stores
/// the same verdict, so a lost race only costs a recomputation.
class Table {
public:
    bool find(const std::string& key, bool& value) const {
        const Shard& s = shard(key);
        std::unique_lock lock(s.mutex, std::defer_lock);
        if (concurrent_) lock.lock();
        auto it = s.map.find(key);
        if (it == s.map.end()) return false;
        value = it->second;
        return true;
    }

    void insert(const std::string& key, bool value) {
        Shard& s = shard(key);
        std::unique_lock lock(s.mutex, std::defer_lock);
        if (concurrent_) lock.lock();
        s.map.emplace(key, value);
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& s : shards_) n += s.map.size();
        return n;
    }

    void clear() {
        for (auto& s : shards_) s.map.clear();
    }

    void set_concurrent(bool c) { concurrent_ = c; }

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<std::string, bool> map;
    };

    Shard& shard(const std::string& key) { return shards_[std::hash<std::string>{}(key) % kShards]; }
    const Shard& shard(const std::string& key) const {
        return shards_[std::hash<std::string>{}(key) % kShards];
    }

    std::array<Shard, kShards> shards_;
    bool concurrent_ = false;
};

struct Counters {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> hits{0};
    std::atomic<std::uint64_t> depth{0};
    std::uint64_t budget = 0;

    void expand(std::uint64_t d) {
        auto n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget != 0 && n > budget) throw BudgetExceeded();
        auto cur = depth.load(std::memory_order_relaxed);
        while (d > cur && !depth.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
        }
    }
};

/// Search over a fixed board structure; colorings are byte vectors
/// (0 uncolored, 1 Left, 2 Right, 3 frozen).
class PlacementSearch {
public:
    PlacementSearch(RulesetTag r, const ColoredGraph& g, Table& table, Counters& counters)
        : ruleset_(r), table_(table), counters_(counters), stamp_(g.vertex_count(), 0) {
        adjacency_.resize(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto adj = g.neighbors(v);
            adjacency_[v].assign(adj.begin(), adj.end());
        }
        queue_.reserve(g.vertex_count());
    }

    static std::vector<std::uint8_t> encode(const ColoredGraph& g) {
        std::vector<std::uint8_t> c(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) c[v] = static_cast<std::uint8_t>(g.color(v));
        return c;
    }

    /// True iff `mover` wins from `c` when Left and Right also hold `lp` and
    /// `rp` private moves.
    bool wins(std::vector<std::uint8_t>& c, PlayerColor mover, std::uint64_t depth, std::uint32_t lp = 0,
              std::uint32_t rp = 0) {
        const std::size_t frozen_mark = frozen_.size();
        freeze_private(c, lp, rp);
        std::string key = make_key(c, mover, lp, rp);
        bool result = false;
        bool cached = false;
        if (table_.find(key, cached)) {
            counters_.hits.fetch_add(1, std::memory_order_relaxed);
            result = cached;
        } else {
            counters_.expand(depth);
            const std::uint8_t mine = code_of(mover);
            const auto board_moves = moves(c, mover);
            const std::uint32_t own = mover == PlayerColor::Left ? lp : rp;
            if (board_moves.empty() && moves(c, opponent(mover)).empty()) {
                // Only private moves remain: the side with more of them moves last.
                result = own > (mover == PlayerColor::Left ? rp : lp);
            } else {
                for (VertexId v : board_moves) {
                    c[v] = mine;
                    bool opp_wins = wins(c, opponent(mover), depth + 1, lp, rp);
                    c[v] = kUncolored;
                    if (!opp_wins) {
                        result = true;
                        break;
                    }
                }
                if (!result && own > 0) {
                    const std::uint32_t l2 = mover == PlayerColor::Left ? lp - 1 : lp;
                    const std::uint32_t r2 = mover == PlayerColor::Right ? rp - 1 : rp;
                    result = !wins(c, opponent(mover), depth + 1, l2, r2);
                }
            }
            table_.insert(key, result);
        }
        while (frozen_.size() > frozen_mark) {
            c[frozen_.back()] = kUncolored;
            frozen_.pop_back();
        }
        return result;
    }

    std::vector<VertexId> moves(std::vector<std::uint8_t>& c, PlayerColor p) {
        std::vector<VertexId> out;
        const std::uint8_t mine = code_of(p);
        for (VertexId v = 0; v < c.size(); ++v) {
            if (c[v] != kUncolored) continue;
            switch (ruleset_) {
            case RulesetTag::Col:
                if (!touches(c, v, mine)) out.push_back(v);
                break;
            case RulesetTag::GraphFjords:
                if (touches(c, v, mine)) out.push_back(v);
                break;
            default:
                if (nogo_ok(c, v, mine)) out.push_back(v);
                break;
            }
        }
        return out;
    }

private:
    void freeze(std::vector<std::uint8_t>& c, VertexId v) {
        c[v] = kFrozen;
        frozen_.push_back(v);
    }

    /// Marks vertices whose future is fixed: ones nobody can ever color and
    /// ones only one player can color without affecting any other vertex.
    /// The latter become private move counts.
    void freeze_private(std::vector<std::uint8_t>& c, std::uint32_t& lp, std::uint32_t& rp) {
        if (ruleset_ == RulesetTag::Col) {
            for (bool changed = true; changed;) {
                changed = false;
                for (VertexId v = 0; v < c.size(); ++v) {
                    if (c[v] != kUncolored) continue;
                    const bool left_ok = !touches(c, v, 1), right_ok = !touches(c, v, 2);
                    bool isolated = true;
                    for (VertexId w : adjacency_[v]) isolated = isolated && c[w] != kUncolored;
                    if (left_ok && right_ok) continue;
                    if (!left_ok && !right_ok) {
                        freeze(c, v);
                    } else if (isolated) {
                        ++(left_ok ? lp : rp);
                        freeze(c, v);
                    } else {
                        continue;
                    }
                    changed = true;
                }
            }
        } else if (ruleset_ == RulesetTag::GraphFjords) {
            ++epoch_;
            for (VertexId s = 0; s < c.size(); ++s) {
                if (c[s] != kUncolored || stamp_[s] == epoch_) continue;
                queue_.clear();
                queue_.push_back(s);
                stamp_[s] = epoch_;
                bool left = false, right = false;
                for (std::size_t head = 0; head < queue_.size(); ++head) {
                    for (VertexId w : adjacency_[queue_[head]]) {
                        left = left || c[w] == 1;
                        right = right || c[w] == 2;
                        if (c[w] == kUncolored && stamp_[w] != epoch_) {
                            stamp_[w] = epoch_;
                            queue_.push_back(w);
                        }
                    }
                }
                if (left && right) continue;
                // A region with one color on its boundary is that player's alone.
                if (left) lp += static_cast<std::uint32_t>(queue_.size());
                if (right) rp += static_cast<std::uint32_t>(queue_.size());
                for (VertexId v : queue_) freeze(c, v);
            }
        }
    }

    bool touches(const std::vector<std::uint8_t>& c, VertexId v, std::uint8_t color) const {
        for (VertexId w : adjacency_[v]) {
            if (c[w] == color) return true;
        }
        return false;
    }

    bool nogo_ok(std::vector<std::uint8_t>& c, VertexId x, std::uint8_t mine) {
        c[x] = mine;
        bool ok = alive(c, x);
        for (VertexId w : adjacency_[x]) {
            if (!ok) break;
            if (c[w] != kUncolored && c[w] != mine) ok = alive(c, w);
        }
        c[x] = kUncolored;
        return ok;
    }

    /// Whether the single-color component through `v` has a liberty.
    bool alive(const std::vector<std::uint8_t>& c, VertexId v) {
        ++epoch_;
        const std::uint8_t color = c[v];
        queue_.clear();
        queue_.push_back(v);
        stamp_[v] = epoch_;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            for (VertexId w : adjacency_[queue_[head]]) {
                if (c[w] == kUncolored) return true;
                if (c[w] == color && stamp_[w] != epoch_) {
                    stamp_[w] = epoch_;
                    queue_.push_back(w);
                }
            }
        }
        return false;
    }

    static std::string make_key(const std::vector<std::uint8_t>& c, PlayerColor mover, std::uint32_t lp,
                                std::uint32_t rp) {
        std::string key(9 + (c.size() + 3) / 4, '\0');
        key[0] = static_cast<char>(code_of(mover));
        std::memcpy(&key[1], &lp, sizeof lp);
        std::memcpy(&key[5], &rp, sizeof rp);
        for (std::size_t i = 0; i < c.size(); ++i) {
            key[9 + i / 4] = static_cast<char>(key[9 + i / 4] | (c[i] << (2 * (i % 4))));
        }
        return key;
    }

    RulesetTag ruleset_;
    Table& table_;
    Counters& counters_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::uint32_t> stamp_;
    std::vector<VertexId> queue_;
    std::vector<VertexId> frozen_;
    std::uint32_t epoch_ = 0;
};

class BtclSearch {
public:
    BtclSearch(Table& table, Counters& counters) : table_(table), counters_(counters) {}

    bool wins(const BtclMachine& m, PlayerColor mover, std::uint64_t depth) {
        std::string key = make_key(m, mover);
        bool cached = false;
        if (table_.find(key, cached)) {
            counters_.hits.fetch_add(1, std::memory_order_relaxed);
            return cached;
        }
        counters_.expand(depth);
        bool result = false;
        if (btcl_left_has_won(m)) {
            result = mover == PlayerColor::Left;
        } else if (m.consecutive_passes() >= 2) {
            result = mover == PlayerColor::Right;
        } else {
            for (const BtclMove& mv : btcl_moves(m, mover)) {
                if (!wins(btcl_apply(m, mover, mv), opponent(mover), depth + 1)) {
                    result = true;
                    break;
                }
            }
        }
        table_.insert(key, result);
        return result;
    }

private:
    static std::string make_key(const BtclMachine& m, PlayerColor mover) {
        std::string key(2 + (m.arcs().size() + 7) / 8, '\0');
        key[0] = static_cast<char>(code_of(mover));
        key[1] = static_cast<char>(m.consecutive_passes());
        for (std::size_t i = 0; i < m.arcs().size(); ++i) {
            if (m.arcs()[i].flipped) key[2 + i / 8] = static_cast<char>(key[2 + i / 8] | (1 << (i % 8)));
        }
        return key;
    }

    Table& table_;
    Counters& counters_;
};

std::string structure_fingerprint(const Position& pos) {
    std::string out(to_string(pos.ruleset));
    out += '\n';
    if (pos.ruleset == RulesetTag::Btcl) {
        const BtclMachine& m = pos.machine();
        out += "p " + std::to_string(m.vertex_count()) + "\n";
        for (const BtclArc& a : m.arcs()) {
            VertexId tail = a.flipped ? a.head : a.tail;
            VertexId head = a.flipped ? a.tail : a.head;
            out += std::to_string(tail) + ' ' + std::to_string(head) + ' ' + to_char(a.owner) +
                   std::to_string(a.weight) + '\n';
        }
        out += "g " + std::to_string(m.goal_arc());
        return out;
    }
    out += serialize_graph(pos.board().with_coloring(
        std::vector<CellColor>(pos.board().vertex_count(), CellColor::Uncolored)));
    return out;
}

}  // namespace

struct Solver::Impl {
    SolverOptions options;
    Table table;
    std::string fingerprint;
};

Solver::Solver(SolverOptions options) : impl_(std::make_unique<Impl>()) {
    impl_->options = options;
    if (impl_->options.workers == 0) impl_->options.workers = 1;
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

std::size_t Solver::table_size() const { return impl_->table.size(); }

void Solver::clear() {
    impl_->table.clear();
    impl_->fingerprint.clear();
}

SolveResult Solver::solve(const Position& pos, PlayerColor mover) {
    pos.validate();
    std::string fp = structure_fingerprint(pos);
    if (fp != impl_->fingerprint) {
        impl_->table.clear();
        impl_->fingerprint = std::move(fp);
    }

    Counters counters;
    counters.budget = impl_->options.node_budget;
    const unsigned workers = impl_->options.workers;
    impl_->table.set_concurrent(workers > 1);

    SolveResult result;
    auto finish = [&](bool mover_wins) {
        result.winner = mover_wins ? mover : opponent(mover);
    };

    try {
        if (pos.ruleset != RulesetTag::Btcl) {
            std::vector<std::uint8_t> coloring = PlacementSearch::encode(pos.board());
            PlacementSearch root(pos.ruleset, pos.board(), impl_->table, counters);
            const auto root_moves = root.moves(coloring, mover);
            if (workers <= 1 || root_moves.size() < 2) {
                bool w = root.wins(coloring, mover, 0);
                finish(w);
                if (w) {
                    // The root is cached now; find the first winning child.
                    for (VertexId v : root_moves) {
                        coloring[v] = code_of(mover);
                        bool opp = root.wins(coloring, opponent(mover), 1);
                        coloring[v] = kUncolored;
                        if (!opp) {
                            result.witness = Move{v};
                            break;
                        }
                    }
                }
            } else {
                counters.expand(0);
                std::atomic<std::size_t> next{0};
                std::atomic<bool> found{false};
                std::vector<std::size_t> winning(root_moves.size(), 0);
                std::exception_ptr error;
                std::mutex error_mutex;
                auto work = [&] {
                    PlacementSearch local(pos.ruleset, pos.board(), impl_->table, counters);
                    std::vector<std::uint8_t> c = coloring;
                    try {
                        for (std::size_t i; !found && (i = next++) < root_moves.size();) {
                            c[root_moves[i]] = code_of(mover);
                            if (!local.wins(c, opponent(mover), 1)) {
                                winning[i] = 1;
                                found = true;
                            }
                            c[root_moves[i]] = kUncolored;
                        }
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        error = std::current_exception();
                        found = true;
                    }
                };
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
                for (auto& t : pool) t.join();
                if (error) std::rethrow_exception(error);
                auto it = std::find(winning.begin(), winning.end(), 1);
                finish(it != winning.end());
                if (it != winning.end()) result.witness = Move{root_moves[it - winning.begin()]};
            }
        } else {
            BtclSearch search(impl_->table, counters);
            const BtclMachine& m = pos.machine();
            bool w = search.wins(m, mover, 0);
            finish(w);
            if (w) {
                for (const BtclMove& mv : btcl_moves(m, mover)) {
                    if (!search.wins(btcl_apply(m, mover, mv), opponent(mover), 1)) {
                        result.witness = Move{mv};
                        break;
                    }
                }
            }
        }
    } catch (const BudgetExceeded&) {
        result.winner.reset();
        result.witness.reset();
    }
    impl_->table.set_concurrent(false);
    result.stats.nodes_expanded = std::min<std::uint64_t>(
        counters.nodes.load(), counters.budget == 0 ? counters.nodes.load() : counters.budget);
    result.stats.table_hits = counters.hits.load();
    result.stats.max_depth = counters.depth.load();
    return result;
}

SolveResult solve_with_stats(const Position& pos, PlayerColor mover, SolverOptions options) {
    Solver solver(options);
    return solver.solve(pos, mover);
}

PlayerColor winner_from(const Position& pos, PlayerColor mover, SolverOptions options) {
    auto r = solve_with_stats(pos, mover, options);
    if (!r.winner) throw BudgetExceeded();
    return *r.winner;
}

OutcomeClass outcome_class(const Position& pos, SolverOptions options) {
    Solver solver(options);
    auto left = solver.solve(pos, PlayerColor::Left);
    auto right = solver.solve(pos, PlayerColor::Right);
    if (!left.winner || !right.winner) throw BudgetExceeded();
    return outcome_from_winners(*left.winner, *right.winner);
}

std::string canonical_key(const Position& pos) {
    std::string out(to_string(pos.ruleset));
    out += '\n';
    if (pos.ruleset == RulesetTag::Btcl) return out + serialize_machine(pos.machine());
    return out + serialize_graph(pos.board());
}

}  // namespace placement
