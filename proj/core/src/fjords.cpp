#include "placement/reductions.hpp"

#include "fragment.hpp"

#include <algorithm>
#include <functional>

namespace placement {

using detail::FragmentBuilder;

namespace {

/// A clause over variable ordinals plus the circuit node whose incentive its
/// vertex pair carries.
struct Clause {
    std::vector<std::size_t> vars;
    std::optional<std::size_t> owner;
};
using Cnf = std::vector<Clause>;

Cnf constant_false() { return {Clause{}}; }

/// Drops repeated and subsumed clauses.
Cnf simplify(Cnf cnf) {
    std::stable_sort(cnf.begin(), cnf.end(),
                     [](const Clause& a, const Clause& b) { return a.vars.size() < b.vars.size(); });
    Cnf out;
    for (Clause& c : cnf) {
        bool subsumed = std::any_of(out.begin(), out.end(), [&](const Clause& kept) {
            return std::includes(c.vars.begin(), c.vars.end(), kept.vars.begin(), kept.vars.end());
        });
        if (!subsumed) out.push_back(std::move(c));
    }
    return out;
}

Cnf disjunction(const Cnf& a, const Cnf& b, std::optional<std::size_t> owner) {
    Cnf out;
    for (const Clause& x : a) {
        for (const Clause& y : b) {
            Clause c;
            std::set_union(x.vars.begin(), x.vars.end(), y.vars.begin(), y.vars.end(), std::back_inserter(c.vars));
            c.owner = owner ? owner : x.owner;
            out.push_back(std::move(c));
        }
    }
    return simplify(std::move(out));
}

Cnf adopt(Cnf cnf, std::size_t owner) {
    for (Clause& c : cnf) {
        if (!c.owner) c.owner = owner;
    }
    return cnf;
}

/// Goal condition of the circuit as a CNF over variable ordinals. Choice
/// outputs are resolved by enumerating Left's picks and taking the
/// disjunction.
Cnf goal_cnf(const Circuit& c) {
    std::vector<std::size_t> variable_ordinal(c.nodes.size(), 0), choices;
    for (std::size_t i = 0, next = 0; i < c.nodes.size(); ++i) {
        if (c.nodes[i].kind == VertexKind::Variable) variable_ordinal[i] = next++;
        if (c.nodes[i].kind == VertexKind::Choice) choices.push_back(i);
    }
    if (choices.size() > 16) throw Error("too many choice gadgets for the Fjords assembly");

    auto evaluate = [&](std::size_t picks) {
        std::map<std::size_t, Cnf> wire;
        std::function<Cnf(std::size_t)> signal = [&](std::size_t arc) -> Cnf {
            if (auto it = wire.find(arc); it != wire.end()) return it->second;
            const std::size_t id = c.wires.at(arc).first;
            const CircuitNode& n = c.nodes[id];
            auto input = [&](std::size_t k) { return k < n.inputs.size() ? signal(n.inputs[k]) : constant_false(); };
            Cnf out;
            switch (n.kind) {
            case VertexKind::Variable: out = {Clause{{variable_ordinal[id]}, std::nullopt}}; break;
            case VertexKind::Split: out = input(0); break;
            case VertexKind::Choice: {
                const std::size_t bit = static_cast<std::size_t>(
                    std::find(choices.begin(), choices.end(), id) - choices.begin());
                const std::size_t picked = (picks >> bit) & 1;
                out = n.outputs[picked] == arc ? adopt(input(0), id) : constant_false();
                break;
            }
            case VertexKind::Or: out = disjunction(input(0), input(1), id); break;
            case VertexKind::And: {
                out = adopt(input(0), id);
                Cnf b = adopt(input(1), id);
                out.insert(out.end(), b.begin(), b.end());
                out = simplify(std::move(out));
                break;
            }
            default: throw Error("unexpected producer kind in circuit");
            }
            wire.emplace(arc, out);
            return out;
        };
        const CircuitNode& goal = c.nodes[c.goal_node];
        Cnf in = goal.inputs.empty() ? constant_false() : signal(goal.inputs[0]);
        return adopt(std::move(in), c.goal_node);
    };

    Cnf result = evaluate(0);
    for (std::size_t picks = 1; picks < (std::size_t{1} << choices.size()); ++picks) {
        result = disjunction(result, evaluate(picks), std::nullopt);
    }
    return result;
}

void attach_clique(FragmentBuilder& fb, VertexId anchor, std::size_t size, std::vector<VertexId>* out) {
    if (size == 0) return;
    std::vector<VertexId> members;
    for (std::size_t i = 0; i < size; ++i) members.push_back(fb.vertex());
    fb.clique(members);
    fb.edge(anchor, members.front());
    if (out) out->insert(out->end(), members.begin(), members.end());
}

/// Claim vertex between a Left seed and a Right seed, with the claimer's
/// reward clique.
VertexId fjords_variable(FragmentBuilder& fb, std::size_t incentive, std::vector<VertexId>* clique) {
    VertexId v = fb.vertex(CellColor::Uncolored, ImageRole::A);
    fb.edge(v, fb.vertex(CellColor::LeftOwned));
    fb.edge(v, fb.vertex(CellColor::RightOwned));
    attach_clique(fb, v, incentive, clique);
    return v;
}

/// Two vertices Right can always reach through a shared Right seed. Each
/// touches every driver, so Left reaches them iff some driver is Left's.
Port fjords_pair(FragmentBuilder& fb, const std::vector<VertexId>& drivers, std::size_t incentive,
                 std::vector<VertexId>* clique) {
    VertexId p = fb.vertex(CellColor::Uncolored, ImageRole::A);
    VertexId q = fb.vertex();
    VertexId seed = fb.vertex(CellColor::RightOwned);
    for (VertexId x : {p, q}) {
        fb.edge(x, seed);
        for (VertexId d : drivers) fb.edge(x, d);
        attach_clique(fb, x, incentive, clique);
    }
    return {p, q};
}

/// Uncolored vertex beside a Left seed: Left's last move.
VertexId fjords_goal(FragmentBuilder& fb) {
    VertexId q = fb.vertex(CellColor::Uncolored, ImageRole::A);
    fb.edge(q, fb.vertex(CellColor::LeftOwned));
    return q;
}

}  // namespace

std::size_t FjordsReductionParams::padded_variable_count() const { return variable_count + variable_count % 2; }

std::size_t FjordsReductionParams::cached_moves() const {
    return (padded_variable_count() + 1) / 2 * variable_incentive;
}

std::vector<std::size_t> incentive_schedule(std::size_t m) {
    if (m == 0) throw Error("incentive schedule needs at least one gadget");
    std::vector<std::size_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = 3 * i;
    return out;
}

FjordsReductionParams fjords_params_for(const BtclMachine& m) {
    Circuit c = extract_circuit(m);
    FjordsReductionParams p;
    p.variable_count = c.count(VertexKind::Variable);
    p.nonvariable_gadget_count = c.nodes.size() - p.variable_count;
    p.schedule = incentive_schedule(p.nonvariable_gadget_count);
    p.variable_incentive = 3 * p.nonvariable_gadget_count;
    return p;
}

Reduction reduce_btcl_to_fjords(const BtclMachine& m, const FjordsReductionParams& params) {
    Circuit c = extract_circuit(m);
    const FjordsReductionParams expected = fjords_params_for(m);
    if (params.variable_count != expected.variable_count ||
        params.nonvariable_gadget_count != expected.nonvariable_gadget_count) {
        throw Error("Fjords parameters do not match the machine's gadget counts");
    }
    if (params.schedule.size() != params.nonvariable_gadget_count) {
        throw Error("Fjords schedule needs one incentive per non-variable gadget");
    }
    const std::size_t top = *std::max_element(params.schedule.begin(), params.schedule.end());
    if (params.variable_incentive <= top) {
        throw Error("variable incentive must exceed every gadget incentive");
    }

    std::vector<std::size_t> incentive(c.nodes.size(), 0);
    const auto order = c.goal_first_order();
    for (std::size_t k = 0; k < order.size(); ++k) incentive[order[k]] = params.schedule[k];

    FragmentBuilder fb;
    std::map<VertexId, VertexId> source_to_image;
    std::vector<VertexId> variable_vertex;
    for (const CircuitNode& n : c.nodes) {
        if (n.kind != VertexKind::Variable) continue;
        VertexId v = fjords_variable(fb, params.variable_incentive, nullptr);
        variable_vertex.push_back(v);
        source_to_image[n.machine_vertex] = v;
    }
    if (params.padded_variable_count() != params.variable_count) {
        fjords_variable(fb, params.variable_incentive, nullptr);
    }

    for (const Clause& clause : goal_cnf(c)) {
        std::vector<VertexId> drivers;
        for (std::size_t x : clause.vars) drivers.push_back(variable_vertex[x]);
        const std::size_t owner = clause.owner.value_or(c.goal_node);
        Port pair = fjords_pair(fb, drivers, incentive[owner], nullptr);
        source_to_image.emplace(c.nodes[owner].machine_vertex, pair.active);
    }
    source_to_image[c.nodes[c.goal_node].machine_vertex] = fjords_goal(fb);
    return {fb.graph(), fb.map(std::move(source_to_image))};
}

FjordsGadget build_fjords_gadget(GadgetKind kind, std::size_t incentive) {
    FragmentBuilder fb;
    FjordsGadget g{ColoredGraph(0, {}), {}, {}};
    g.spec.kind = kind;
    auto input = [&] {
        Port p{fb.vertex(CellColor::Uncolored, ImageRole::A), std::nullopt};
        g.spec.input_ports.push_back(p);
        return p.active;
    };
    switch (kind) {
    case GadgetKind::Variable:
        g.spec.output_ports = {Port{fjords_variable(fb, incentive, &g.clique), std::nullopt}};
        break;
    case GadgetKind::IOPair: {
        VertexId d = input();
        g.spec.output_ports = {fjords_pair(fb, {d}, incentive, &g.clique)};
        break;
    }
    case GadgetKind::Or: {
        VertexId a = input(), b = input();
        g.spec.output_ports = {fjords_pair(fb, {a, b}, incentive, &g.clique)};
        break;
    }
    case GadgetKind::And: {
        // One pair per input; the output is active when Left holds both
        // pairs' active vertices.
        VertexId a = input(), b = input();
        Port pa = fjords_pair(fb, {a}, incentive, &g.clique);
        Port pb = fjords_pair(fb, {b}, incentive, &g.clique);
        g.spec.output_ports = {Port{pa.active, pb.active}};
        break;
    }
    case GadgetKind::Choice: {
        VertexId a = input();
        Port p = fjords_pair(fb, {a}, incentive, &g.clique);
        g.spec.output_ports = {Port{p.active, std::nullopt}, Port{*p.inactive, std::nullopt}};
        break;
    }
    case GadgetKind::Split: {
        // Both outputs hang off the input alone: its owner takes both.
        VertexId a = input();
        for (int k = 0; k < 2; ++k) {
            VertexId o = fb.vertex(CellColor::Uncolored, ImageRole::A);
            fb.edge(o, a);
            attach_clique(fb, o, incentive, &g.clique);
            g.spec.output_ports.push_back(Port{o, std::nullopt});
        }
        break;
    }
    case GadgetKind::Goal: {
        input();
        fjords_goal(fb);
        break;
    }
    case GadgetKind::Clique: {
        VertexId seed = fb.vertex(CellColor::LeftOwned);
        attach_clique(fb, seed, incentive, &g.clique);
        break;
    }
    default:
        throw Error("Fjords has no '" + std::string(to_string(kind)) + "' gadget");
    }
    g.fragment = fb.graph();
    return g;
}

}  // namespace placement
