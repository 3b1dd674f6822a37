// placement: solve, reduce, and verify placement-game positions.

#include "placement/reductions.hpp"
#include "placement/rulesets.hpp"
#include "placement/solver.hpp"
#include "placement/text_format.hpp"
#include "placement/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace placement;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

struct UsageError : Error {
    using Error::Error;
};

struct Common {
    std::string ruleset = "col";
    std::string mover;
    bool json = false;
    std::uint64_t budget = 0;
    unsigned workers = 1;
    std::uint64_t seed = 0;

    SolverOptions solver() const { return {budget, workers}; }
};

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

Position load(const std::string& path, RulesetTag r) {
    const std::string text = read_file(path);
    if (r == RulesetTag::Btcl) return Position::btcl(parse_machine(text));
    return Position::placement(r, parse_graph(text));
}

std::string move_text(const Move& m) {
    if (const auto* v = std::get_if<VertexId>(&m)) return std::to_string(*v);
    const auto& b = std::get<BtclMove>(m);
    return b.is_pass() ? "pass" : "flip " + std::to_string(*b.arc);
}

int report_exit(const VerificationReport& r) {
    switch (r.verdict()) {
    case Verdict::Pass: return kOk;
    case Verdict::Fail: return kFail;
    case Verdict::Inconclusive: return kInconclusive;
    }
    return kFail;
}

int print_report(const VerificationReport& r, bool as_json) {
    if (as_json) {
        std::cout << to_json(r, 2) << '\n';
    } else {
        std::cout << to_text(r);
    }
    return report_exit(r);
}

// --- verbs -------------------------------------------------------------------

int cmd_solve(const Common& c, const std::string& file) {
    const Position pos = load(file, ruleset_from_string(c.ruleset));
    json out{{"ruleset", c.ruleset}};
    if (!c.mover.empty()) {
        const PlayerColor mover = player_from_char(c.mover.at(0));
        const SolveResult r = solve_with_stats(pos, mover, c.solver());
        if (r.budget_exceeded()) {
            std::cerr << "node budget of " << c.budget << " exceeded\n";
            return kInconclusive;
        }
        out["mover"] = c.mover;
        out["winner"] = std::string(1, to_char(*r.winner));
        if (r.witness) out["move"] = move_text(*r.witness);
        out["nodes_expanded"] = r.stats.nodes_expanded;
        out["table_hits"] = r.stats.table_hits;
        out["max_depth"] = r.stats.max_depth;
        if (!c.json) {
            std::cout << "winner: " << to_char(*r.winner) << '\n';
            if (r.witness) std::cout << "move: " << move_text(*r.witness) << '\n';
        }
    } else {
        Solver solver(c.solver());
        const SolveResult left = solver.solve(pos, PlayerColor::Left);
        const SolveResult right = solver.solve(pos, PlayerColor::Right);
        if (left.budget_exceeded() || right.budget_exceeded()) {
            std::cerr << "node budget of " << c.budget << " exceeded\n";
            return kInconclusive;
        }
        const OutcomeClass cls = outcome_from_winners(*left.winner, *right.winner);
        out["outcome"] = std::string(to_string(cls));
        out["nodes_expanded"] = left.stats.nodes_expanded + right.stats.nodes_expanded;
        if (!c.json) std::cout << "outcome: " << to_string(cls) << '\n';
    }
    if (c.json) std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_moves(const Common& c, const std::string& file) {
    if (c.mover.empty()) throw UsageError("moves needs --mover L|R");
    const Position pos = load(file, ruleset_from_string(c.ruleset));
    const auto moves = legal_moves(pos, player_from_char(c.mover.at(0)));
    json list = json::array();
    for (const Move& m : moves) list.push_back(move_text(m));
    if (c.json) {
        std::cout << json{{"ruleset", c.ruleset}, {"mover", c.mover}, {"moves", list}}.dump(2) << '\n';
    } else {
        for (const Move& m : moves) std::cout << move_text(m) << '\n';
    }
    return kOk;
}

int cmd_reduce(const Common& c, const std::string& file, const std::string& from, const std::string& to,
               const std::string& prefix, std::optional<std::size_t> rays) {
    Reduction red{ColoredGraph(0, {}), {}};
    if (from == "col" && to == "nogo") {
        red = reduce_col_to_nogo(parse_graph(read_file(file)));
    } else if (from == "btcl" && to == "col") {
        red = reduce_btcl_to_col(parse_machine(read_file(file)), ColReductionParams{rays});
    } else if (from == "btcl" && to == "fjords") {
        const BtclMachine m = parse_machine(read_file(file));
        red = reduce_btcl_to_fjords(m, fjords_params_for(m));
    } else {
        throw UsageError("unsupported reduction " + from + " -> " + to +
                         " (supported: col->nogo, btcl->col, btcl->fjords)");
    }
    write_file(prefix + ".graph", serialize_graph(red.image));
    write_file(prefix + ".map", serialize_reduction_map(red.map));
    if (c.json) {
        std::cout << json{{"graph", prefix + ".graph"},
                          {"map", prefix + ".map"},
                          {"vertices", red.image.vertex_count()},
                          {"edges", red.image.edge_count()}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "wrote " << prefix << ".graph (" << red.image.vertex_count() << " vertices, "
                  << red.image.edge_count() << " edges) and " << prefix << ".map\n";
    }
    return kOk;
}

int cmd_verify(const Common& c, const std::string& src_file, const std::string& image_file,
               const std::string& map_file, const std::string& from, const std::string& to,
               std::optional<std::size_t> depth) {
    VerificationReport report;
    if (from == "col" && to == "nogo") {
        const ColoredGraph src = parse_graph(read_file(src_file));
        const ColoredGraph image = parse_graph(read_file(image_file));
        const ReductionMap map = parse_reduction_map(read_file(map_file));
        report = verify_forbidden_vertices(image, map, depth.value_or(image.uncolored_count()));
        report.merge(verify_move_bijection(src, image, map, depth.value_or(src.uncolored_count())));
        report.merge(verify_outcome_equivalence(Position::placement(RulesetTag::Col, src),
                                                Position::placement(RulesetTag::GraphNoGo, image), c.solver()));
    } else if (from == "btcl" && (to == "col" || to == "fjords")) {
        const BtclMachine m = parse_machine(read_file(src_file));
        const ColoredGraph image = parse_graph(read_file(image_file));
        parse_reduction_map(read_file(map_file)).validate(image.vertex_count());
        // The Col construction hands the machine's Left role to Right.
        report = verify_outcome_equivalence(Position::btcl(m), Position::placement(ruleset_from_string(to), image),
                                            c.solver(), to == "col");
    } else {
        throw UsageError("unsupported reduction " + from + " -> " + to);
    }
    return print_report(report, c.json);
}

int cmd_gadget_test(const Common& c, const std::string& kind_name, std::size_t incentive) {
    const GadgetKind kind = gadget_kind_from_string(kind_name);
    const RulesetTag r = ruleset_from_string(c.ruleset);
    if (r == RulesetTag::Col) {
        const ColGadget g = build_col_gadget(kind);
        return print_report(gadget_truth_table(g.fragment, g.spec, r), c.json);
    }
    if (r == RulesetTag::GraphFjords) {
        const FjordsGadget g = build_fjords_gadget(kind, incentive);
        return print_report(gadget_truth_table(g.fragment, g.spec, r, incentive), c.json);
    }
    throw UsageError("gadget-test supports --ruleset col or fjords");
}

ColoredGraph grid(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return ColoredGraph(rows * cols, edges);
}

int cmd_gen(const Common& c, const std::vector<std::string>& args, double density) {
    constexpr std::size_t kMaxVertices = 4096;
    const std::string& kind = args.at(0);
    auto size_arg = [&](std::size_t i) {
        if (args.size() <= i) throw UsageError("gen " + kind + " needs a size");
        std::size_t pos = 0;
        unsigned long n = 0;
        try {
            n = std::stoul(args[i], &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != args[i].size() || n > kMaxVertices) throw UsageError("bad size '" + args[i] + "'");
        return static_cast<std::size_t>(n);
    };
    std::string header;
    ColoredGraph g(0, {});
    if (kind == "pos-cnf") {
        if (args.size() < 2) throw UsageError("gen pos-cnf needs a formula");
        std::cout << serialize_machine(build_pos_cnf_machine(parse_pos_cnf(args[1])));
        return kOk;
    } else if (kind == "path" || kind == "cycle" || kind == "clique") {
        const std::size_t n = size_arg(1);
        std::vector<Edge> edges;
        for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        if (kind == "cycle" && n >= 3) edges.emplace_back(0, static_cast<VertexId>(n - 1));
        if (kind == "clique") {
            edges.clear();
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            }
        }
        g = ColoredGraph(n, edges);
    } else if (kind == "grid") {
        const std::size_t rows = size_arg(1);
        const std::size_t cols = args.size() > 2 ? size_arg(2) : rows;
        if (rows * cols > kMaxVertices) throw UsageError("grid too large");
        g = grid(rows, cols);
    } else if (kind == "random") {
        const std::size_t n = size_arg(1);
        if (density < 0.0 || density > 1.0) throw UsageError("--density must be in [0, 1]");
        std::mt19937_64 rng(c.seed);
        std::bernoulli_distribution coin(density);
        std::vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        g = ColoredGraph(n, edges);
        std::ostringstream h;
        h << "# random n=" << n << " density=" << density << " seed=" << c.seed << '\n';
        header = h.str();
    } else {
        throw UsageError("unknown generator '" + kind + "' (path, cycle, clique, grid, random, pos-cnf)");
    }
    std::cout << header << serialize_graph(g);
    return kOk;
}

int cmd_sweep(const Common& c, std::size_t max_vertices) {
    SweepOptions opts;
    opts.workers = c.workers;
    opts.node_budget = c.budget;
    if (max_vertices > opts.vertex_limit) {
        std::cerr << "sweep refused: " << max_vertices << " vertices exceeds the limit of " << opts.vertex_limit
                  << '\n';
    }
    return print_report(exhaustive_reduction_sweep(max_vertices, opts), c.json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solve, reduce, and verify placement-game positions"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* sub, bool with_ruleset) {
        if (with_ruleset) {
            sub->add_option("--ruleset", c.ruleset, "col, nogo, fjords, or btcl")
                ->check(CLI::IsMember({"col", "nogo", "fjords", "btcl"}));
        }
        sub->add_flag("--json", c.json, "machine-readable output");
        sub->add_option("--budget", c.budget, "node budget per solve (0 = unlimited)");
        sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
    };

    std::string file, image_file, map_file, from, to, prefix, gadget;
    std::optional<std::size_t> rays, depth;
    std::size_t incentive = 0, max_vertices = 0;
    std::vector<std::string> gen_args;
    double density = 0.5;

    auto* solve = app.add_subcommand("solve", "winner for --mover, or the outcome class");
    solve->add_option("file", file, "position file ('-' for stdin)")->required();
    solve->add_option("--mover", c.mover, "L or R")->check(CLI::IsMember({"L", "R"}));
    add_common(solve, true);

    auto* moves = app.add_subcommand("moves", "legal moves for --mover");
    moves->add_option("file", file)->required();
    moves->add_option("--mover", c.mover, "L or R")->check(CLI::IsMember({"L", "R"}))->required();
    add_common(moves, true);

    auto* reduce = app.add_subcommand("reduce", "write <out>.graph and <out>.map");
    reduce->add_option("file", file)->required();
    reduce->add_option("--from", from, "col or btcl")->required();
    reduce->add_option("--to", to, "nogo, col, or fjords")->required();
    reduce->add_option("--out", prefix, "output prefix")->required();
    reduce->add_option("--rays", rays, "star size for btcl->col");
    add_common(reduce, false);

    auto* verify = app.add_subcommand("verify", "check a reduction bundle");
    verify->add_option("source", file)->required();
    verify->add_option("image", image_file)->required();
    verify->add_option("map", map_file)->required();
    verify->add_option("--from", from)->required();
    verify->add_option("--to", to)->required();
    verify->add_option("--depth", depth, "plies for the col->nogo checks (default: full)");
    add_common(verify, false);

    auto* gtest = app.add_subcommand("gadget-test", "run a gadget truth table");
    gtest->add_option("kind", gadget, "and, or, choice, split, goal-edge, ...")->required();
    gtest->add_option("--incentive", incentive, "Fjords incentive clique size");
    add_common(gtest, true);

    auto* gen = app.add_subcommand("gen", "generate a test instance");
    gen->add_option("args", gen_args, "path N | cycle N | clique N | grid R [C] | random N | pos-cnf FORMULA")
        ->required();
    gen->add_option("--seed", c.seed, "seed for random graphs");
    gen->add_option("--density", density, "edge probability for random graphs");

    auto* sweep = app.add_subcommand("sweep", "exhaustive col->nogo sweep");
    sweep->add_option("max_vertices", max_vertices)->required();
    add_common(sweep, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return cmd_solve(c, file);
        if (*moves) return cmd_moves(c, file);
        if (*reduce) return cmd_reduce(c, file, from, to, prefix, rays);
        if (*verify) return cmd_verify(c, file, image_file, map_file, from, to, depth);
        if (*gtest) return cmd_gadget_test(c, gadget, incentive);
        if (*gen) return cmd_gen(c, gen_args, density);
        if (*sweep) return cmd_sweep(c, max_vertices);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInconclusive;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
