#include "placement/reductions.hpp"

#include "fragment.hpp"

#include <array>

namespace placement {

using detail::FragmentBuilder;

namespace {

constexpr std::array<std::string_view, 10> kGadgetNames = {
    "edge-pair", "variable", "goal-edge", "and", "or", "choice", "split", "io-pair", "goal", "clique",
};

/// Two adjacent uncolored vertices plus a Left guard touching both, so Left
/// can never play on the pair.
Port col_pair(FragmentBuilder& fb) {
    VertexId a = fb.vertex(CellColor::Uncolored, ImageRole::A);
    VertexId i = fb.vertex();
    VertexId guard = fb.vertex(CellColor::LeftOwned);
    fb.edge(a, i);
    fb.edge(guard, a);
    fb.edge(guard, i);
    return {a, i};
}

/// A pair whose inactive vertex is already Right's: a constant-false input.
Port col_false_pair(FragmentBuilder& fb) {
    Port p = col_pair(fb);
    fb.set_color(*p.inactive, CellColor::RightOwned);
    return p;
}

/// Claim vertex x is open to both players. Right on x frees the output's
/// active vertex; Left on x leaves z (guarded) as Right's compensation
/// only while the output stays inactive.
VertexId attach_variable(FragmentBuilder& fb, const Port& out) {
    VertexId x = fb.vertex();
    VertexId z = fb.vertex();
    VertexId guard = fb.vertex(CellColor::LeftOwned);
    fb.edge(x, z);
    fb.edge(z, guard);
    fb.edge(z, out.active);
    return x;
}

/// The uncolored goal vertex sits next to a Left vertex and the input's
/// inactive vertex: Right may color it only if the input is active.
VertexId attach_goal(FragmentBuilder& fb, const Port& in) {
    VertexId q = fb.vertex();
    VertexId blue = fb.vertex(CellColor::LeftOwned);
    fb.edge(q, blue);
    fb.edge(q, *in.inactive);
    return q;
}

void attach_and(FragmentBuilder& fb, const Port& a, const Port& b, const Port& out) {
    fb.edge(out.active, *a.inactive);
    fb.edge(out.active, *b.inactive);
}

/// 4-clique: one Left vertex, one vertex on the output's active vertex, one
/// on each input's inactive vertex.
VertexId attach_or(FragmentBuilder& fb, const Port& a, const Port& b, const Port& out) {
    VertexId blue = fb.vertex(CellColor::LeftOwned);
    VertexId co = fb.vertex(), c1 = fb.vertex(), c2 = fb.vertex();
    fb.clique({blue, co, c1, c2});
    fb.edge(co, out.active);
    fb.edge(c1, *a.inactive);
    fb.edge(c2, *b.inactive);
    return co;
}

void attach_fan(FragmentBuilder& fb, const Port& in, const Port& o1, const Port& o2, bool choice) {
    fb.edge(o1.active, *in.inactive);
    fb.edge(o2.active, *in.inactive);
    if (choice) fb.edge(o1.active, o2.active);
}

}  // namespace

std::string_view to_string(GadgetKind k) { return kGadgetNames[static_cast<std::size_t>(k)]; }

GadgetKind gadget_kind_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kGadgetNames.size(); ++i) {
        if (kGadgetNames[i] == s) return static_cast<GadgetKind>(i);
    }
    throw Error("unknown gadget kind '" + std::string(s) + "'");
}

ColGadget build_col_gadget(GadgetKind kind) {
    FragmentBuilder fb;
    GadgetSpec spec;
    spec.kind = kind;
    switch (kind) {
    case GadgetKind::EdgePair:
    case GadgetKind::IOPair:
        spec.output_ports = {col_pair(fb)};
        break;
    case GadgetKind::Variable: {
        Port out = col_pair(fb);
        attach_variable(fb, out);
        spec.output_ports = {out};
        break;
    }
    case GadgetKind::GoalEdge:
    case GadgetKind::Goal: {
        Port in = col_pair(fb);
        attach_goal(fb, in);
        spec.input_ports = {in};
        break;
    }
    case GadgetKind::And:
    case GadgetKind::Or: {
        Port a = col_pair(fb), b = col_pair(fb), out = col_pair(fb);
        if (kind == GadgetKind::And) {
            attach_and(fb, a, b, out);
        } else {
            attach_or(fb, a, b, out);
        }
        spec.input_ports = {a, b};
        spec.output_ports = {out};
        break;
    }
    case GadgetKind::Choice:
    case GadgetKind::Split: {
        Port in = col_pair(fb), o1 = col_pair(fb), o2 = col_pair(fb);
        attach_fan(fb, in, o1, o2, kind == GadgetKind::Choice);
        spec.input_ports = {in};
        spec.output_ports = {o1, o2};
        break;
    }
    default:
        throw Error("Col has no '" + std::string(to_string(kind)) + "' gadget");
    }
    return {fb.graph(), std::move(spec)};
}

std::size_t col_star_rays(const BtclMachine& m) {
    Circuit c = extract_circuit(m);
    std::size_t n = c.count(VertexKind::Variable);
    const bool dummy = n % 2 == 0;
    if (dummy) ++n;
    // Right's moves in the gadget component with the goal unreachable: one per
    // playable pair, one per variable gadget (x or z), one per Or clique.
    std::size_t right_moves = c.wires.size() + (dummy ? 1 : 0) + n + c.count(VertexKind::Or);
    // Left claims floor(n/2) variables when Right opens the game.
    return right_moves - n / 2;
}

Reduction reduce_btcl_to_col(const BtclMachine& m, const ColReductionParams& params) {
    Circuit c = extract_circuit(m);
    FragmentBuilder fb;
    std::map<std::size_t, Port> wire_port;
    for (const auto& [arc, ends] : c.wires) wire_port[arc] = col_pair(fb);

    std::map<VertexId, VertexId> source_to_image;
    std::size_t variables = 0;
    for (const CircuitNode& n : c.nodes) {
        std::vector<Port> in, out;
        for (std::size_t a : n.inputs) in.push_back(wire_port.at(a));
        for (std::size_t k = 0; k < n.false_inputs; ++k) in.push_back(col_false_pair(fb));
        for (std::size_t a : n.outputs) out.push_back(wire_port.at(a));
        VertexId rep = 0;
        switch (n.kind) {
        case VertexKind::Variable:
            rep = attach_variable(fb, out[0]);
            ++variables;
            break;
        case VertexKind::Goal: rep = attach_goal(fb, in[0]); break;
        case VertexKind::And:
            attach_and(fb, in[0], in[1], out[0]);
            rep = out[0].active;
            break;
        case VertexKind::Or: rep = attach_or(fb, in[0], in[1], out[0]); break;
        case VertexKind::Choice:
        case VertexKind::Split:
            attach_fan(fb, in[0], out[0], out[1], n.kind == VertexKind::Choice);
            rep = out[0].active;
            break;
        default: break;
        }
        source_to_image[n.machine_vertex] = rep;
    }
    if (variables % 2 == 0) attach_variable(fb, col_pair(fb));

    const std::size_t rays = params.star_rays.value_or(col_star_rays(m));
    VertexId hub = fb.vertex(CellColor::RightOwned);
    for (std::size_t r = 0; r < rays; ++r) fb.edge(hub, fb.vertex());

    return {fb.graph(), fb.map(std::move(source_to_image))};
}

}  // namespace placement
