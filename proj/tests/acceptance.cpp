// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include "oracles.hpp"

#include "placement/reductions.hpp"
#include "placement/solver.hpp"
#include "placement/verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

using namespace placement;

namespace {

constexpr RulesetTag kPlacement[] = {RulesetTag::Col, RulesetTag::GraphNoGo, RulesetTag::GraphFjords};
constexpr PlayerColor kPlayers[] = {PlayerColor::Left, PlayerColor::Right};

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void move_set_oracle() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    std::size_t cases = 0, mismatches = 0;
    for (std::size_t n = 0; n <= 5; ++n) {
        oracle::for_each_labeled_graph(n, [&](const ColoredGraph& g) {
            for (int k = 0; k < 8; ++k) {
                const ColoredGraph c = oracle::random_coloring(g, rng);
                for (RulesetTag r : kPlacement) {
                    if (!oracle::board_ok(r, c)) continue;
                    for (PlayerColor p : kPlayers) {
                        const auto moves = placement_moves(r, c, p);
                        for (VertexId v = 0; v < c.vertex_count(); ++v) {
                            const bool listed = std::binary_search(moves.begin(), moves.end(), v);
                            mismatches += listed != oracle::move_ok(r, c, v, p);
                        }
                        ++cases;
                    }
                }
            }
        });
    }
    const double s = seconds_since(t0);
    report(1, cases >= 10000 && mismatches == 0 && s < 60,
           fmt("move sets vs rule oracle: %zu cases, %zu discrepancies, %.1f s", cases, mismatches, s));
}

void solver_oracle() {
    const auto t0 = Clock::now();
    std::size_t positions = 0, mismatches = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
        oracle::for_each_graph_up_to_iso(n, [&](const ColoredGraph& g) {
            oracle::for_each_coloring(g, [&](const ColoredGraph& c) {
                for (RulesetTag r : kPlacement) {
                    if (!oracle::board_ok(r, c)) continue;
                    const Position pos = Position::placement(r, c);
                    for (PlayerColor p : kPlayers) {
                        const PlayerColor want = oracle::mover_wins(r, c, p) ? p : opponent(p);
                        mismatches += winner_from(pos, p) != want;
                    }
                    ++positions;
                }
            });
        });
    }
    report(2, mismatches == 0,
           fmt("memoized solver vs plain minimax, <= 6 vertices: %zu positions, %zu discrepancies, %.1f s", positions,
               mismatches, seconds_since(t0)));
}

void size_law() {
    std::mt19937_64 rng(1000);
    std::uniform_int_distribution<std::size_t> size(0, 30);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const ColoredGraph g = oracle::random_graph(size(rng), density(rng), rng);
        const Reduction r = reduce_col_to_nogo(g);
        bad += r.image.vertex_count() != 4 * g.vertex_count() + 2 * g.edge_count() ||
               r.image.edge_count() != 3 * g.vertex_count() + 4 * g.edge_count();
    }
    report(3, bad == 0, fmt("Col->NoGo size law on 1000 seeded random graphs: %zu violations", bad));
}

void sweep_criteria() {
    const auto t0 = Clock::now();
    VerificationReport forbidden, outcome, bijection;
    std::size_t sources = 0, euler_sources = 0, euler_bad = 0;
    for_each_col_position(4, [&](const ColoredGraph& src) {
        ++sources;
        const Reduction red = reduce_col_to_nogo(src);
        forbidden.merge(verify_forbidden_vertices(red.image, red.map, red.image.uncolored_count()));
        bijection.merge(verify_move_bijection(src, red.image, red.map, src.uncolored_count()));
        outcome.merge(verify_outcome_equivalence(Position::placement(RulesetTag::Col, src),
                                                 Position::placement(RulesetTag::GraphNoGo, red.image)));
        if (euler_bound_check(src)) {
            ++euler_sources;
            euler_bad += !euler_bound_check(red.image);
        }
    });
    const double s = seconds_since(t0);
    report(4, forbidden.verdict() == Verdict::Pass,
           fmt("forbidden F vertices over %zu sources <= 4 vertices: %s, %llu checks", sources,
               std::string(to_string(forbidden.verdict())).c_str(),
               static_cast<unsigned long long>(forbidden.checks_run)));
    report(5, outcome.verdict() == Verdict::Pass && bijection.verdict() == Verdict::Pass && s < 600,
           fmt("outcome classes preserved over %zu sources: %s (move bijection %s), %.1f s", sources,
               std::string(to_string(outcome.verdict())).c_str(),
               std::string(to_string(bijection.verdict())).c_str(), s));
    report(10, euler_bad == 0,
           fmt("Euler bound preserved: %zu of %zu sources satisfy it, %zu images violate it", euler_sources, sources,
               euler_bad));
}

void col_gadgets() {
    std::string detail;
    bool ok = true;
    for (GadgetKind k : {GadgetKind::And, GadgetKind::Or, GadgetKind::Choice, GadgetKind::Split,
                         GadgetKind::GoalEdge}) {
        const ColGadget g = build_col_gadget(k);
        const VerificationReport r = gadget_truth_table(g.fragment, g.spec, RulesetTag::Col);
        ok = ok && r.verdict() == Verdict::Pass;
        detail += fmt(" %s=%s", std::string(to_string(k)).c_str(), std::string(to_string(r.verdict())).c_str());
    }
    report(6, ok, "Col gadget truth tables:" + detail);
}

void schedule() {
    std::size_t bad = 0;
    for (std::size_t m = 1; m <= 50; ++m) {
        const auto s = incentive_schedule(m);
        bool ok = s.size() == m;
        for (std::size_t i = 0; ok && i < m; ++i) ok = s[i] == 3 * i;
        bad += !ok;
    }
    // Variable incentive as reported for real machines.
    std::size_t var_bad = 0;
    for (const char* f : {"(1)", "(1|2)", "(1)&(2)", "(1|2)&(2|3)&(3)"}) {
        const BtclMachine m = build_pos_cnf_machine(parse_pos_cnf(f));
        const FjordsReductionParams p = fjords_params_for(m);
        var_bad += p.variable_incentive != 3 * p.nonvariable_gadget_count ||
                   p.schedule != incentive_schedule(p.nonvariable_gadget_count);
    }
    report(7, bad == 0 && var_bad == 0,
           fmt("incentive schedule [0,3,...,3m-3] for m = 1..50: %zu wrong; variable incentive 3m on machines: %zu "
               "wrong",
               bad, var_bad));
}

void fjords_and() {
    const FjordsGadget g = build_fjords_gadget(GadgetKind::And, 0);
    auto clamp = [&](bool a, bool b) {
        return g.fragment
            .with_color(g.spec.input_ports[0].active, a ? CellColor::LeftOwned : CellColor::RightOwned)
            .with_color(g.spec.input_ports[1].active, b ? CellColor::LeftOwned : CellColor::RightOwned);
    };
    const int limit = static_cast<int>(g.fragment.vertex_count());
    const auto both = integer_value(RulesetTag::GraphFjords, clamp(true, true), limit);
    const auto mixed = integer_value(RulesetTag::GraphFjords, clamp(true, false), limit);
    const bool ok = both && mixed && *both - *mixed == 2;
    report(8, ok,
           fmt("Fjords And: value with inputs (A,A) = %s, (A,I) = %s; net loss %s",
               both ? std::to_string(*both).c_str() : "none", mixed ? std::to_string(*mixed).c_str() : "none",
               both && mixed ? std::to_string(*both - *mixed).c_str() : "n/a"));
}

void pos_cnf() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    const std::pair<const char*, PlayerColor> cases[] = {
        {"(1)", PlayerColor::Left}, {"(1|2)", PlayerColor::Left}, {"(1)&(2)", PlayerColor::Right}};
    for (auto [formula, want] : cases) {
        const BtclMachine m = build_pos_cnf_machine(parse_pos_cnf(formula));
        const Position machine = Position::btcl(m);
        const PlayerColor first = winner_from(machine, PlayerColor::Left);
        const OutcomeClass mc = outcome_class(machine);
        const Reduction rc = reduce_btcl_to_col(m);
        const OutcomeClass cc = outcome_class(Position::placement(RulesetTag::Col, rc.image));
        const Reduction rf = reduce_btcl_to_fjords(m, fjords_params_for(m));
        const OutcomeClass fc = outcome_class(Position::placement(RulesetTag::GraphFjords, rf.image));
        const bool line_ok = first == want && cc == mirrored(mc) && fc == mc;
        ok = ok && line_ok;
        detail += fmt(" %s: winner %c, machine %s, Col %s (mirrored), Fjords %s;", formula, to_char(first),
                      std::string(to_string(mc)).c_str(), std::string(to_string(cc)).c_str(),
                      std::string(to_string(fc)).c_str());
    }
    const double s = seconds_since(t0);
    report(9, ok && s < 600, "POS-CNF end to end:" + detail + fmt(" %.1f s", s));
}

void negative_controls() {
    const ColoredGraph k2 = oracle::path(2), p3 = oracle::path(3);
    const Reduction no_seed = corrupt_without_seed_pair(k2);
    const Verdict f = verify_forbidden_vertices(no_seed.image, no_seed.map, no_seed.image.uncolored_count()).verdict();
    const Reduction no_white = corrupt_without_edge_white(k2);
    const Verdict b = verify_move_bijection(k2, no_white.image, no_white.map, k2.uncolored_count()).verdict();
    const Reduction p3_cut = corrupt_without_edge_white(p3);
    const Verdict o = verify_outcome_equivalence(Position::placement(RulesetTag::Col, p3),
                                                 Position::placement(RulesetTag::GraphNoGo, p3_cut.image))
                          .verdict();
    const bool ok = f == Verdict::Fail && b == Verdict::Fail && o == Verdict::Fail;
    report(11, ok,
           fmt("negative controls: forbidden-vertex %s, move-bijection %s, outcome %s (each must fail)",
               std::string(to_string(f)).c_str(), std::string(to_string(b)).c_str(),
               std::string(to_string(o)).c_str()));
}

}  // namespace

int main() {
    move_set_oracle();
    solver_oracle();
    size_law();
    sweep_criteria();
    col_gadgets();
    schedule();
    fjords_and();
    pos_cnf();
    negative_controls();
    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
