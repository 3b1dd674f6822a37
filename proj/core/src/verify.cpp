#include "placement/verify.hpp"

#include "placement/text_format.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace placement {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict VerificationReport::verdict() const {
    if (first_failure) return Verdict::Fail;
    return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

void VerificationReport::check(bool ok, const std::function<Failure()>& describe) {
    ++checks_run;
    if (!ok && !first_failure) fail(describe());
}

void VerificationReport::fail(Failure f) {
    if (!first_failure) first_failure = std::move(f);
    passed = false;
}

void VerificationReport::merge(const VerificationReport& other) {
    checks_run += other.checks_run;
    inconclusive = inconclusive || other.inconclusive;
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
    passed = !first_failure;
}

std::string to_json(const VerificationReport& r, int indent) {
    nlohmann::json j;
    j["verdict"] = std::string(to_string(r.verdict()));
    j["passed"] = r.passed;
    j["checks_run"] = r.checks_run;
    if (r.first_failure) {
        j["first_failure"] = {{"position", r.first_failure->position},
                              {"expected", r.first_failure->expected},
                              {"actual", r.first_failure->actual}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j.dump(indent);
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << to_string(r.verdict()) << " (" << r.checks_run << " checks)\n";
    if (r.first_failure) {
        out << "first failure:\n" << r.first_failure->position;
        if (!r.first_failure->position.empty() && r.first_failure->position.back() != '\n') out << '\n';
        out << "expected: " << r.first_failure->expected << "\nactual: " << r.first_failure->actual << '\n';
    }
    return out.str();
}

namespace {

std::string coloring_key(const ColoredGraph& g, PlayerColor mover) {
    std::string key(g.vertex_count() + 1, '\0');
    key[0] = to_char(mover);
    for (VertexId v = 0; v < g.vertex_count(); ++v) key[v + 1] = static_cast<char>(g.color(v));
    return key;
}

std::string list(const std::vector<VertexId>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
    return out + "}";
}

std::string describe(const ColoredGraph& g, std::optional<PlayerColor> mover = std::nullopt) {
    std::string out = serialize_graph(g);
    if (mover) out += std::string("# ") + to_char(*mover) + " to move\n";
    return out;
}

}  // namespace

VerificationReport verify_forbidden_vertices(const ColoredGraph& image, const ReductionMap& map, std::size_t depth) {
    map.validate(image.vertex_count());
    const auto forbidden = map.vertices_with(ImageRole::F);
    VerificationReport report;
    std::unordered_map<std::string, std::size_t> explored;

    std::function<void(const ColoredGraph&, PlayerColor, std::size_t)> visit =
        [&](const ColoredGraph& g, PlayerColor mover, std::size_t left) {
            std::string key = coloring_key(g, mover);
            if (auto it = explored.find(key); it != explored.end() && it->second >= left) return;
            explored[key] = left;
            std::vector<VertexId> own;
            for (PlayerColor p : {PlayerColor::Left, PlayerColor::Right}) {
                std::vector<VertexId> moves;
                try {
                    moves = nogo_moves(g, p);
                } catch (const Error& e) {
                    report.fail({describe(g), "legal Graph-NoGo position", e.what()});
                    return;
                }
                std::vector<VertexId> bad;
                std::set_intersection(moves.begin(), moves.end(), forbidden.begin(), forbidden.end(),
                                      std::back_inserter(bad));
                report.check(bad.empty(), [&] {
                    return Failure{describe(g), std::string("no F-role move for ") + to_char(p),
                                   "F-role moves " + list(bad)};
                });
                if (p == mover) own = std::move(moves);
            }
            if (left == 0) return;
            for (VertexId v : own) visit(g.with_color(v, cell_of(mover)), opponent(mover), left - 1);
        };
    visit(image, PlayerColor::Left, depth);
    visit(image, PlayerColor::Right, depth);
    return report;
}

VerificationReport verify_move_bijection(const ColoredGraph& src, const ColoredGraph& image, const ReductionMap& map,
                                         std::size_t depth) {
    map.validate(image.vertex_count());
    if (map.source_to_image.size() != src.vertex_count()) {
        throw Error("reduction map covers " + std::to_string(map.source_to_image.size()) +
                    " source vertices but the source has " + std::to_string(src.vertex_count()));
    }
    for (VertexId v = 0; v < src.vertex_count(); ++v) {
        if (!map.source_to_image.count(v)) throw Error("source vertex " + std::to_string(v) + " is not mapped");
    }
    VerificationReport report;
    std::unordered_map<std::string, std::size_t> explored;

    std::function<void(const ColoredGraph&, const ColoredGraph&, PlayerColor, std::size_t)> visit =
        [&](const ColoredGraph& s, const ColoredGraph& img, PlayerColor mover, std::size_t left) {
            std::string key = coloring_key(s, mover);
            if (auto it = explored.find(key); it != explored.end() && it->second >= left) return;
            explored[key] = left;
            std::vector<VertexId> own;
            for (PlayerColor p : {PlayerColor::Left, PlayerColor::Right}) {
                const auto col = col_moves(s, p);
                std::vector<VertexId> expected;
                for (VertexId v : col) expected.push_back(map.source_to_image.at(v));
                std::sort(expected.begin(), expected.end());
                std::vector<VertexId> actual;
                try {
                    actual = nogo_moves(img, p);
                } catch (const Error& e) {
                    report.fail({describe(s), "legal Graph-NoGo image", e.what()});
                    return;
                }
                report.check(actual == expected, [&] {
                    return Failure{describe(s), std::string("image moves for ") + to_char(p) + " " + list(expected),
                                   list(actual)};
                });
                if (p == mover) own = col;
            }
            if (left == 0) return;
            for (VertexId v : own) {
                visit(s.with_color(v, cell_of(mover)), img.with_color(map.source_to_image.at(v), cell_of(mover)),
                      opponent(mover), left - 1);
            }
        };
    visit(src, image, PlayerColor::Left, depth);
    visit(src, image, PlayerColor::Right, depth);
    return report;
}

VerificationReport verify_outcome_equivalence(const Position& src, const Position& image, SolverOptions options,
                                              bool mirror) {
    VerificationReport report;
    try {
        OutcomeClass expected = outcome_class(src, options);
        if (mirror) expected = mirrored(expected);
        const OutcomeClass actual = outcome_class(image, options);
        report.check(expected == actual, [&] {
            std::string pos = "source:\n" + canonical_key(src) + "\nimage:\n" + canonical_key(image);
            return Failure{pos, std::string(to_string(expected)), std::string(to_string(actual))};
        });
    } catch (const BudgetExceeded&) {
        report.inconclusive = true;
    }
    return report;
}

// --- integer values and gadgets --------------------------------------------

namespace {

/// Disjoint union of `g` with `count` moves only `owner` can ever make.
ColoredGraph with_private_moves(RulesetTag r, const ColoredGraph& g, PlayerColor owner, std::size_t count) {
    if (count == 0) return g;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<CellColor> coloring(g.coloring().begin(), g.coloring().end());
    const VertexId hub = static_cast<VertexId>(coloring.size());
    // Col: a hub of the other color blocks the other player. Fjords: a hub
    // of the owner's color lets only the owner in.
    if (r == RulesetTag::Col) {
        coloring.push_back(cell_of(opponent(owner)));
    } else if (r == RulesetTag::GraphFjords) {
        coloring.push_back(cell_of(owner));
    } else {
        throw Error("private move pools are defined for Col and Graph-Fjords only");
    }
    for (std::size_t i = 0; i < count; ++i) {
        edges.emplace_back(hub, static_cast<VertexId>(coloring.size()));
        coloring.push_back(CellColor::Uncolored);
    }
    return ColoredGraph(coloring.size(), edges, coloring);
}

/// Uncolored vertices `p` could ever reach under Fjords, ignoring the other
/// player.
std::set<VertexId> fjords_reach(const ColoredGraph& g, PlayerColor p) {
    std::set<VertexId> seen;
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.color(v) != cell_of(p)) continue;
        for (VertexId w : g.neighbors(v)) {
            if (g.color(w) == CellColor::Uncolored && seen.insert(w).second) stack.push_back(w);
        }
    }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if (g.color(w) == CellColor::Uncolored && seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen;
}

/// Input port states to clamp: bit k set means input k is active.
std::vector<std::size_t> assignments(const GadgetSpec& spec) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < (std::size_t{1} << spec.input_ports.size()); ++a) out.push_back(a);
    return out;
}

std::string assignment_name(const GadgetSpec& spec, std::size_t a) {
    std::string out = std::string(to_string(spec.kind)) + " inputs (";
    for (std::size_t k = 0; k < spec.input_ports.size(); ++k) {
        out += (k ? ", " : "") + std::string((a >> k) & 1 ? "active" : "inactive");
    }
    return out + ")";
}

void check_ports(const ColoredGraph& g, const GadgetSpec& spec, bool need_inactive) {
    auto ok = [&](const Port& p, bool inactive_required) {
        if (p.active >= g.vertex_count() || g.color(p.active) != CellColor::Uncolored) return false;
        if (inactive_required && !p.inactive) return false;
        if (p.inactive && (*p.inactive >= g.vertex_count() || g.color(*p.inactive) != CellColor::Uncolored)) {
            return false;
        }
        return true;
    };
    for (const Port& p : spec.input_ports) {
        if (!ok(p, need_inactive)) throw Error("gadget input port does not match the fragment");
    }
    for (const Port& p : spec.output_ports) {
        if (!ok(p, false)) throw Error("gadget output port does not match the fragment");
    }
}

/// The one uncolored vertex outside every port.
VertexId goal_vertex(const ColoredGraph& g, const GadgetSpec& spec) {
    std::vector<VertexId> found;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.color(v) != CellColor::Uncolored) continue;
        bool in_port = false;
        for (const auto* ports : {&spec.input_ports, &spec.output_ports}) {
            for (const Port& p : *ports) in_port = in_port || p.active == v || p.inactive == v;
        }
        if (!in_port) found.push_back(v);
    }
    if (found.size() != 1) throw Error("goal fragment must have exactly one uncolored vertex outside its ports");
    return found.front();
}

// --- Col -------------------------------------------------------------------

/// Every coloring Right can reach by moving alone from `g`.
std::vector<ColoredGraph> right_only_states(const ColoredGraph& g) {
    std::vector<ColoredGraph> out{g};
    std::unordered_set<std::string> seen{coloring_key(g, PlayerColor::Right)};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const ColoredGraph cur = out[i];
        for (VertexId v : col_moves(cur, PlayerColor::Right)) {
            ColoredGraph next = cur.with_color(v, CellColor::RightOwned);
            if (seen.insert(coloring_key(next, PlayerColor::Right)).second) out.push_back(std::move(next));
        }
    }
    return out;
}

bool red(const ColoredGraph& g, VertexId v) { return g.color(v) == CellColor::RightOwned; }

VerificationReport col_truth_table(const ColoredGraph& fragment, const GadgetSpec& spec) {
    VerificationReport report;
    const bool guarded = spec.kind != GadgetKind::Variable;
    check_ports(fragment, spec, true);
    for (std::size_t a : assignments(spec)) {
        ColoredGraph g = fragment;
        for (std::size_t k = 0; k < spec.input_ports.size(); ++k) {
            const Port& p = spec.input_ports[k];
            g = g.with_color((a >> k) & 1 ? p.active : *p.inactive, CellColor::RightOwned);
        }
        if (!col_legal(g)) throw Error("clamping the inputs makes the fragment illegal");
        const auto states = right_only_states(g);
        const std::string name = assignment_name(spec, a);
        const std::size_t active_inputs = static_cast<std::size_t>(__builtin_popcountll(a));
        const bool all = active_inputs == spec.input_ports.size();

        if (guarded) {
            bool left_idle = std::all_of(states.begin(), states.end(),
                                         [](const ColoredGraph& s) { return col_moves(s, PlayerColor::Left).empty(); });
            report.check(left_idle, [&] { return Failure{name, "Left has no move in the fragment", "Left can move"}; });
        }
        auto reachable = [&](const std::function<bool(const ColoredGraph&)>& pred) {
            return std::any_of(states.begin(), states.end(), pred);
        };
        auto expect = [&](bool want, bool got, const std::string& what) {
            report.check(want == got, [&] {
                return Failure{name, what + (want ? " reachable" : " unreachable"),
                               what + (got ? " reachable" : " unreachable")};
            });
        };
        const auto& out = spec.output_ports;
        switch (spec.kind) {
        case GadgetKind::And:
            expect(all, reachable([&](const ColoredGraph& s) { return red(s, out[0].active); }), "active output");
            break;
        case GadgetKind::Or: {
            // With no active input Right can still color the output, but only
            // by giving up the clique move.
            auto red_count = [&](const ColoredGraph& s) {
                return std::count(s.coloring().begin(), s.coloring().end(), CellColor::RightOwned);
            };
            std::ptrdiff_t best = 0, best_active = -1;
            for (const auto& s : states) {
                best = std::max(best, red_count(s));
                if (red(s, out[0].active)) best_active = std::max(best_active, red_count(s));
            }
            expect(true, best_active >= 0, "active output");
            expect(active_inputs > 0, best_active == best, "cost-free active output");
            break;
        }
        case GadgetKind::Choice:
            expect(all, reachable([&](const ColoredGraph& s) { return red(s, out[0].active); }), "first output active");
            expect(all, reachable([&](const ColoredGraph& s) { return red(s, out[1].active); }), "second output active");
            expect(false, reachable([&](const ColoredGraph& s) { return red(s, out[0].active) && red(s, out[1].active); }),
                   "both outputs active");
            break;
        case GadgetKind::Split:
            expect(all, reachable([&](const ColoredGraph& s) { return red(s, out[0].active) && red(s, out[1].active); }),
                   "both outputs active");
            expect(all, reachable([&](const ColoredGraph& s) { return red(s, out[0].active) || red(s, out[1].active); }),
                   "an active output");
            break;
        case GadgetKind::GoalEdge:
        case GadgetKind::Goal: {
            const VertexId q = goal_vertex(fragment, spec);
            expect(all, reachable([&](const ColoredGraph& s) { return red(s, q); }), "colored goal vertex");
            break;
        }
        case GadgetKind::EdgePair:
        case GadgetKind::IOPair:
        case GadgetKind::Variable:
            expect(true, reachable([&](const ColoredGraph& s) { return red(s, out[0].active); }), "active vertex");
            expect(true, reachable([&](const ColoredGraph& s) { return red(s, *out[0].inactive); }), "inactive vertex");
            expect(false, reachable([&](const ColoredGraph& s) { return red(s, out[0].active) && red(s, *out[0].inactive); }),
                   "both pair vertices");
            break;
        default: throw Error("no Col contract for gadget '" + std::string(to_string(spec.kind)) + "'");
        }
    }
    return report;
}

// --- Fjords ------------------------------------------------------------------

VerificationReport fjords_truth_table(const ColoredGraph& fragment, const GadgetSpec& spec, std::size_t incentive) {
    VerificationReport report;
    check_ports(fragment, spec, false);
    const int limit = static_cast<int>(fragment.vertex_count());
    const int pair_swing = 2 * (1 + static_cast<int>(incentive));

    for (std::size_t a : assignments(spec)) {
        ColoredGraph g = fragment;
        for (std::size_t k = 0; k < spec.input_ports.size(); ++k) {
            g = g.with_color(spec.input_ports[k].active,
                             (a >> k) & 1 ? CellColor::LeftOwned : CellColor::RightOwned);
        }
        const std::string name = assignment_name(spec, a);
        const int active = __builtin_popcountll(a);
        const int inactive = static_cast<int>(spec.input_ports.size()) - active;
        const auto value = integer_value(RulesetTag::GraphFjords, g, limit);
        auto expect_value = [&](int want) {
            report.check(value == want, [&] {
                return Failure{name, "value " + std::to_string(want),
                               value ? "value " + std::to_string(*value) : "not an integer"};
            });
        };
        const auto left = fjords_reach(g, PlayerColor::Left);
        const auto right = fjords_reach(g, PlayerColor::Right);
        auto expect_reach = [&](const std::set<VertexId>& reach, VertexId v, bool want, const std::string& who) {
            report.check(reach.count(v) == (want ? 1u : 0u), [&] {
                return Failure{name, who + (want ? " reaches " : " cannot reach ") + std::to_string(v),
                               who + (want ? " cannot reach " : " reaches ") + std::to_string(v)};
            });
        };
        const auto& out = spec.output_ports;
        switch (spec.kind) {
        case GadgetKind::Variable: {
            const VertexId v = out[0].active;
            const int t = static_cast<int>(incentive);
            auto claimed = [&](PlayerColor p) {
                return integer_value(RulesetTag::GraphFjords, g.with_color(v, cell_of(p)), limit);
            };
            report.check(claimed(PlayerColor::Left) == t,
                         [&] { return Failure{"variable claimed by Left", "value " + std::to_string(t), "other"}; });
            report.check(claimed(PlayerColor::Right) == -t,
                         [&] { return Failure{"variable claimed by Right", "value " + std::to_string(-t), "other"}; });
            const auto cls = outcome_class(Position::placement(RulesetTag::GraphFjords, g));
            report.check(cls == OutcomeClass::N,
                         [&] { return Failure{"unclaimed variable", "N", std::string(to_string(cls))}; });
            break;
        }
        case GadgetKind::IOPair:
        case GadgetKind::Or:
            expect_value(active > 0 ? 0 : -pair_swing);
            for (VertexId v : {out[0].active, *out[0].inactive}) {
                expect_reach(left, v, active > 0, "Left");
                expect_reach(right, v, true, "Right");
            }
            break;
        case GadgetKind::And: {
            // Each dead input hands Right its pair: two vertices Left could
            // otherwise claim, plus their cliques.
            expect_value(-pair_swing * inactive);
            std::size_t left_pair_vertices = 0;
            for (VertexId v : left) {
                for (const Port& p : spec.input_ports) {
                    if (fragment.adjacent(v, p.active)) {
                        ++left_pair_vertices;
                        break;
                    }
                }
            }
            const std::size_t want = 2 * static_cast<std::size_t>(active);
            report.check(left_pair_vertices == want, [&] {
                return Failure{name, std::to_string(want) + " Left-claimable pair vertices",
                               std::to_string(left_pair_vertices)};
            });
            break;
        }
        case GadgetKind::Choice:
            expect_value(active > 0 ? 0 : -pair_swing);
            for (const Port& o : out) {
                expect_reach(left, o.active, active > 0, "Left");
                expect_reach(right, o.active, true, "Right");
            }
            break;
        case GadgetKind::Split:
            expect_value(active > 0 ? pair_swing : -pair_swing);
            for (const Port& o : out) {
                expect_reach(left, o.active, active > 0, "Left");
                expect_reach(right, o.active, active == 0, "Right");
            }
            break;
        case GadgetKind::Goal: expect_value(1); break;
        case GadgetKind::Clique: expect_value(static_cast<int>(incentive)); break;
        default: throw Error("no Fjords contract for gadget '" + std::string(to_string(spec.kind)) + "'");
        }
    }
    return report;
}

}  // namespace

std::optional<int> integer_value(RulesetTag ruleset, const ColoredGraph& g, int limit, SolverOptions options) {
    for (int k = 0; k <= 2 * limit; ++k) {
        // 0, 1, -1, 2, -2, ...
        const int v = k % 2 ? (k + 1) / 2 : -(k / 2);
        ColoredGraph shifted = v > 0   ? with_private_moves(ruleset, g, PlayerColor::Right, static_cast<std::size_t>(v))
                               : v < 0 ? with_private_moves(ruleset, g, PlayerColor::Left, static_cast<std::size_t>(-v))
                                       : g;
        const Position pos = Position::placement(ruleset, std::move(shifted));
        if (outcome_class(pos, options) == OutcomeClass::P) return v;
    }
    return std::nullopt;
}

VerificationReport gadget_truth_table(const ColoredGraph& fragment, const GadgetSpec& spec, RulesetTag ruleset,
                                      std::size_t incentive) {
    switch (ruleset) {
    case RulesetTag::Col: return col_truth_table(fragment, spec);
    case RulesetTag::GraphFjords: return fjords_truth_table(fragment, spec, incentive);
    default: throw Error("gadget truth tables exist for Col and Graph-Fjords only");
    }
}

// --- sweeps --------------------------------------------------------------

void for_each_col_position(std::size_t max_vertices, const std::function<void(const ColoredGraph&)>& fn) {
    for (std::size_t n = 0; n <= max_vertices; ++n) {
        std::vector<Edge> pairs;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        }
        std::size_t colorings = 1;
        for (std::size_t i = 0; i < n; ++i) colorings *= 3;
        for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if ((mask >> i) & 1) edges.push_back(pairs[i]);
            }
            const ColoredGraph base(n, edges);
            for (std::size_t code = 0; code < colorings; ++code) {
                std::vector<CellColor> coloring(n);
                for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) coloring[i] = static_cast<CellColor>(c % 3);
                ColoredGraph g = base.with_coloring(std::move(coloring));
                if (col_legal(g)) fn(g);
            }
        }
    }
}

VerificationReport exhaustive_reduction_sweep(std::size_t max_vertices, const SweepOptions& options) {
    if (max_vertices > options.vertex_limit) {
        VerificationReport refused;
        refused.inconclusive = true;
        return refused;
    }
    std::vector<ColoredGraph> sources;
    for_each_col_position(max_vertices, [&](const ColoredGraph& g) { sources.push_back(g); });

    std::vector<VerificationReport> reports(sources.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        SolverOptions solver;
        solver.node_budget = options.node_budget;
        for (std::size_t i; (i = next++) < sources.size();) {
            const ColoredGraph& src = sources[i];
            const Reduction red = reduce_col_to_nogo(src);
            VerificationReport r = verify_forbidden_vertices(red.image, red.map, red.image.uncolored_count());
            r.merge(verify_move_bijection(src, red.image, red.map, src.uncolored_count()));
            r.merge(verify_outcome_equivalence(Position::placement(RulesetTag::Col, src),
                                               Position::placement(RulesetTag::GraphNoGo, red.image), solver));
            reports[i] = std::move(r);
        }
    };
    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    VerificationReport total;
    for (const auto& r : reports) total.merge(r);
    return total;
}

// --- negative controls -------------------------------------------------------

Reduction corrupt_without_seed_pair(const ColoredGraph& src) {
    if (src.vertex_count() == 0) throw Error("the seed-pair control needs a source vertex");
    Reduction r = reduce_col_to_nogo(src);
    r.image = r.image.with_color(0, CellColor::Uncolored).with_color(1, CellColor::Uncolored);
    return r;
}

Reduction corrupt_without_edge_white(const ColoredGraph& src) {
    if (src.edge_count() == 0) throw Error("the edge-vertex control needs a source edge");
    Reduction r = reduce_col_to_nogo(src);
    const VertexId gone = static_cast<VertexId>(r.image.vertex_count() - 1);
    std::vector<Edge> edges;
    for (const Edge& e : r.image.edges()) {
        if (e.first != gone && e.second != gone) edges.push_back(e);
    }
    std::vector<CellColor> coloring(r.image.coloring().begin(), r.image.coloring().end());
    coloring.pop_back();
    r.image = ColoredGraph(gone, edges, std::move(coloring));
    r.map.roles.pop_back();
    return r;
}

}  // namespace placement
