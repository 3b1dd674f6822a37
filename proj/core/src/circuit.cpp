#include "placement/reductions.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace placement {

namespace {

bool is_logic(VertexKind k) {
    switch (k) {
    case VertexKind::Variable:
    case VertexKind::Goal:
    case VertexKind::And:
    case VertexKind::Or:
    case VertexKind::Choice:
    case VertexKind::Split:
        return true;
    default:
        return false;
    }
}

std::pair<std::size_t, std::size_t> expected_arity(VertexKind k) {
    switch (k) {
    case VertexKind::Variable: return {0, 1};
    case VertexKind::Goal: return {1, 0};
    case VertexKind::And:
    case VertexKind::Or: return {2, 1};
    case VertexKind::Choice:
    case VertexKind::Split: return {1, 2};
    default: return {0, 0};
    }
}

/// Weight a consumer needs on an input wire; 0 means any weight works.
int required_input_weight(VertexKind consumer) {
    switch (consumer) {
    case VertexKind::And:
    case VertexKind::Choice: return 1;
    case VertexKind::Split: return 2;
    default: return 0;
    }
}

/// Weight a producer's output wire must have; 0 means any weight works.
int natural_output_weight(VertexKind producer) {
    switch (producer) {
    case VertexKind::And: return 2;
    case VertexKind::Split:
    case VertexKind::Choice: return 1;
    default: return 0;
    }
}

/// Builds annotated machines from a gate-level description. Every signal is
/// consumed exactly once; fan-out goes through Split.
class MachineBuilder {
public:
    struct Signal {
        std::size_t node;
        std::size_t port;
    };
    static constexpr std::size_t kFalse = static_cast<std::size_t>(-1);

    Signal variable() { return {add(VertexKind::Variable, {}), 0}; }

    Signal gate(VertexKind k, Signal a, Signal b) { return {add(k, {id(a), id(b)}), 0}; }

    std::pair<Signal, Signal> fan(VertexKind k, Signal in) {
        std::size_t n = add(k, {id(in)});
        return {{n, 0}, {n, 1}};
    }

    void goal(Signal in) {
        if (goal_) throw Error("circuit already has a goal");
        goal_ = add(VertexKind::Goal, {id(in)});
    }

    BtclMachine build();

private:
    struct Node {
        VertexKind kind;
        /// Encoded signals (node * 2 + port) or kFalse.
        std::vector<std::size_t> inputs;
    };

    static std::size_t id(Signal s) { return s.node * 2 + s.port; }

    std::size_t add(VertexKind k, std::vector<std::size_t> inputs) {
        nodes_.push_back({k, std::move(inputs)});
        return nodes_.size() - 1;
    }

    std::vector<Node> nodes_;
    std::optional<std::size_t> goal_;
};

BtclMachine MachineBuilder::build() {
    if (!goal_) throw Error("circuit has no goal");

    // Insert Or(x, false) converters where wire weights cannot agree.
    for (std::size_t c = 0; c < nodes_.size(); ++c) {
        for (std::size_t slot = 0; slot < nodes_[c].inputs.size(); ++slot) {
            std::size_t sig = nodes_[c].inputs[slot];
            if (sig == kFalse) continue;
            int need = required_input_weight(nodes_[c].kind);
            int have = natural_output_weight(nodes_[sig / 2].kind);
            if (need != 0 && have != 0 && need != have) {
                std::size_t conv = add(VertexKind::Or, {sig, kFalse});
                nodes_[c].inputs[slot] = conv * 2;
            }
        }
    }

    std::vector<int> uses(nodes_.size() * 2, 0);
    for (const Node& n : nodes_) {
        for (std::size_t sig : n.inputs) {
            if (sig != kFalse && ++uses[sig] > 1) throw Error("signal consumed twice; use a Split");
        }
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        std::size_t outs = expected_arity(nodes_[i].kind).second;
        for (std::size_t p = 0; p < outs; ++p) {
            if (uses[i * 2 + p] != 1) throw Error("circuit has an unconsumed signal");
        }
    }

    constexpr VertexId kAnchor0 = 0, kAnchor1 = 1;
    std::size_t vertex_count = 2 + nodes_.size();
    std::vector<VertexKind> kinds(vertex_count, VertexKind::Terminal);
    for (std::size_t i = 0; i < nodes_.size(); ++i) kinds[2 + i] = nodes_[i].kind;
    auto vertex_of = [](std::size_t node) { return static_cast<VertexId>(2 + node); };
    auto terminal = [&] {
        kinds.push_back(VertexKind::Terminal);
        return static_cast<VertexId>(vertex_count++);
    };

    std::vector<BtclArc> arcs;
    auto arc = [&](VertexId tail, VertexId head, PlayerColor owner, int weight) {
        arcs.push_back({tail, head, owner, false, weight});
        return arcs.size() - 1;
    };
    // Two-vertex anchor: each arc feeds the other endpoint, so neither can
    // ever flip. Supports hang off kAnchor1.
    arc(kAnchor0, kAnchor1, PlayerColor::Left, 2);
    arc(kAnchor1, kAnchor0, PlayerColor::Left, 2);

    std::vector<int> output_weight(nodes_.size() * 2, 0);
    for (const Node& n : nodes_) {
        for (std::size_t sig : n.inputs) {
            if (sig == kFalse) continue;
            int need = required_input_weight(n.kind);
            int have = natural_output_weight(nodes_[sig / 2].kind);
            output_weight[sig] = need != 0 ? need : (have != 0 ? have : 1);
        }
    }

    std::size_t goal_arc = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        const VertexId v = vertex_of(i);
        for (std::size_t sig : n.inputs) {
            if (sig == kFalse) {
                // Sole in-arc of its sink, so it can never flip.
                arc(v, terminal(), PlayerColor::Left, 2);
            } else {
                // Inactive wires point into their producer.
                arc(v, vertex_of(sig / 2), PlayerColor::Left, output_weight[sig]);
            }
        }
        int support = 0;
        switch (n.kind) {
        case VertexKind::Variable: {
            support = output_weight[i * 2] == 1 ? 1 : 0;
            VertexId sink = terminal();
            arc(kAnchor1, sink, PlayerColor::Left, 2);
            arc(sink, v, PlayerColor::Right, 2);
            break;
        }
        case VertexKind::Or: support = 1; break;
        case VertexKind::Goal: {
            support = 1;
            VertexId sink = terminal();
            arc(kAnchor1, sink, PlayerColor::Left, 2);
            goal_arc = arc(sink, v, PlayerColor::Left, 1);
            break;
        }
        default: break;
        }
        if (support > 0) arc(kAnchor1, v, PlayerColor::Left, support);
    }
    return BtclMachine(vertex_count, std::move(arcs), goal_arc, std::move(kinds));
}

}  // namespace

std::size_t Circuit::count(VertexKind k) const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [k](const CircuitNode& n) { return n.kind == k; }));
}

std::vector<std::size_t> Circuit::goal_first_order() const {
    // Kahn's algorithm over consumer -> producer edges, starting at the goal.
    std::vector<std::size_t> pending(nodes.size(), 0);
    for (const auto& [arc, ends] : wires) ++pending[ends.first];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (pending[i] == 0) ready.push(i);
    }
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t n = ready.top();
        ready.pop();
        if (nodes[n].kind != VertexKind::Variable) order.push_back(n);
        for (std::size_t a : nodes[n].inputs) {
            std::size_t producer = wires.at(a).first;
            if (--pending[producer] == 0) ready.push(producer);
        }
    }
    return order;
}

Circuit extract_circuit(const BtclMachine& m) {
    if (m.kinds().empty()) throw Error("machine has no vertex kind annotation");
    Circuit c;
    std::vector<std::size_t> node_of(m.vertex_count(), static_cast<std::size_t>(-1));
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        VertexKind k = m.kind(v);
        if (k == VertexKind::Unspecified) {
            throw Error("vertex " + std::to_string(v) + " has no kind; cannot map it to a gadget");
        }
        if (is_logic(k)) {
            node_of[v] = c.nodes.size();
            c.nodes.push_back({k, v, {}, {}, 0});
        }
    }
    const BtclArc& goal = m.arc(m.goal_arc());
    const VertexId goal_vertex = goal.flipped ? goal.tail : goal.head;
    if (m.kind(goal_vertex) != VertexKind::Goal) throw Error("goal arc does not enter a Goal vertex");

    for (std::size_t i = 0; i < m.arcs().size(); ++i) {
        if (i == m.goal_arc()) continue;
        const BtclArc& a = m.arc(i);
        const VertexId tail = a.flipped ? a.head : a.tail;
        const VertexId head = a.flipped ? a.tail : a.head;
        const bool tail_logic = is_logic(m.kind(tail)), head_logic = is_logic(m.kind(head));
        if (tail_logic && head_logic) {
            c.nodes[node_of[head]].outputs.push_back(i);
            c.nodes[node_of[tail]].inputs.push_back(i);
            c.wires[i] = {node_of[head], node_of[tail]};
        } else if (tail_logic) {
            ++c.nodes[node_of[tail]].false_inputs;
        }
    }

    std::size_t goals = 0;
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const CircuitNode& n = c.nodes[i];
        auto [ins, outs] = expected_arity(n.kind);
        if (n.inputs.size() + n.false_inputs != ins || n.outputs.size() != outs) {
            throw Error(std::string(to_string(n.kind)) + " vertex " + std::to_string(n.machine_vertex) +
                        " has " + std::to_string(n.inputs.size() + n.false_inputs) + " inputs and " +
                        std::to_string(n.outputs.size()) + " outputs");
        }
        if (n.kind == VertexKind::Goal) {
            ++goals;
            c.goal_node = i;
        }
    }
    if (goals != 1) throw Error("machine must have exactly one Goal vertex");

    std::size_t non_variables = c.nodes.size() - c.count(VertexKind::Variable);
    if (c.goal_first_order().size() != non_variables) throw Error("circuit wiring has a cycle");
    return c;
}

BtclMachine build_pos_cnf_machine(const std::vector<std::vector<int>>& clauses) {
    if (clauses.empty()) throw Error("POS-CNF formula has no clauses");
    int max_var = -1;
    for (const auto& clause : clauses) {
        if (clause.empty()) throw Error("POS-CNF clause is empty");
        for (int x : clause) {
            if (x < 0) throw Error("POS-CNF variables are non-negative indices");
            max_var = std::max(max_var, x);
        }
    }
    const std::size_t n = static_cast<std::size_t>(max_var) + 1;
    std::vector<std::size_t> occurrences(n, 0);
    for (const auto& clause : clauses) {
        for (int x : clause) ++occurrences[static_cast<std::size_t>(x)];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (occurrences[i] == 0) throw Error("variable " + std::to_string(i + 1) + " never occurs");
    }

    MachineBuilder b;
    std::vector<std::vector<MachineBuilder::Signal>> copies(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto sig = b.variable();
        for (std::size_t k = occurrences[i]; k > 1; --k) {
            auto [first, rest] = b.fan(VertexKind::Split, sig);
            copies[i].push_back(first);
            sig = rest;
        }
        copies[i].push_back(sig);
        std::reverse(copies[i].begin(), copies[i].end());
    }

    std::optional<MachineBuilder::Signal> all;
    for (const auto& clause : clauses) {
        std::optional<MachineBuilder::Signal> any;
        for (int x : clause) {
            auto lit = copies[static_cast<std::size_t>(x)].back();
            copies[static_cast<std::size_t>(x)].pop_back();
            any = any ? b.gate(VertexKind::Or, *any, lit) : lit;
        }
        all = all ? b.gate(VertexKind::And, *all, *any) : *any;
    }
    b.goal(*all);
    return b.build();
}

std::vector<std::vector<int>> parse_pos_cnf(std::string_view formula) {
    std::vector<std::vector<int>> clauses(1);
    std::size_t i = 0;
    bool expect_literal = true;
    while (i < formula.size()) {
        char ch = formula[i];
        if (ch == ' ' || ch == '(' || ch == ')' || ch == 'x') {
            ++i;
        } else if (ch == '|') {
            if (expect_literal) throw Error("POS-CNF: '|' without a literal before it");
            expect_literal = true;
            ++i;
        } else if (ch == '&') {
            if (expect_literal) throw Error("POS-CNF: '&' without a literal before it");
            clauses.emplace_back();
            expect_literal = true;
            ++i;
        } else if (ch >= '0' && ch <= '9') {
            if (!expect_literal) throw Error("POS-CNF: missing operator between literals");
            int v = 0;
            while (i < formula.size() && formula[i] >= '0' && formula[i] <= '9') v = v * 10 + (formula[i++] - '0');
            if (v < 1) throw Error("POS-CNF variables are numbered from 1");
            clauses.back().push_back(v - 1);
            expect_literal = false;
        } else {
            throw Error(std::string("POS-CNF: unexpected character '") + ch + "'");
        }
    }
    if (expect_literal) throw Error("POS-CNF formula is empty or ends with an operator");
    return clauses;
}

}  // namespace placement
