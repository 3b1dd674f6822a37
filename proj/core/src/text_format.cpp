#include "placement/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace placement {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

/// Splits one line into whitespace-separated tokens, dropping `#` comments.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
               line[j] != '#') {
            ++j;
        }
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    /// Next non-empty tokenized line; false at end of input.
    bool next(std::vector<Token>& tokens) {
        while (pos_ <= text_.size()) {
            auto end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            auto line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            tokens = tokenize(line);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    std::size_t line() const { return line_no_; }

    [[noreturn]] void fail(const Token& t, const std::string& what) const {
        throw ParseError(line_no_, t.column, what);
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, 1, what); }

    std::uint64_t number(const Token& t) const {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
            fail(t, "expected a non-negative integer, got '" + std::string(t.text) + "'");
        }
        return v;
    }

    VertexId vertex(const Token& t, std::size_t n) const {
        auto v = number(t);
        if (v >= n) fail(t, "vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n) + ")");
        return static_cast<VertexId>(v);
    }

    PlayerColor player(const Token& t) const {
        if (t.text == "L") return PlayerColor::Left;
        if (t.text == "R") return PlayerColor::Right;
        fail(t, "expected L or R, got '" + std::string(t.text) + "'");
    }

    void arity(const std::vector<Token>& tokens, std::size_t n) const {
        if (tokens.size() != n) {
            fail(tokens.back(), "'" + std::string(tokens[0].text) + "' line takes " +
                                    std::to_string(n - 1) + " arguments");
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

std::size_t read_header(LineReader& in, std::vector<Token>& tokens) {
    if (!in.next(tokens)) throw ParseError(in.line() == 0 ? 1 : in.line(), 1, "missing 'p <n>' header");
    if (tokens[0].text != "p") in.fail(tokens[0], "expected 'p <n>' header");
    in.arity(tokens, 2);
    return static_cast<std::size_t>(in.number(tokens[1]));
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
    LineReader in(text);
    std::vector<Token> t;
    const std::size_t n = read_header(in, t);
    std::vector<Edge> edges;
    std::vector<CellColor> coloring(n, CellColor::Uncolored);
    std::set<Edge> seen;
    while (in.next(t)) {
        if (t[0].text == "e") {
            in.arity(t, 3);
            VertexId u = in.vertex(t[1], n), v = in.vertex(t[2], n);
            if (u == v) in.fail(t[2], "self-loop at vertex " + std::to_string(u));
            Edge e{std::min(u, v), std::max(u, v)};
            if (!seen.insert(e).second) {
                in.fail(t[0], "parallel edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
            }
            edges.push_back(e);
        } else if (t[0].text == "c") {
            in.arity(t, 3);
            VertexId v = in.vertex(t[1], n);
            if (coloring[v] != CellColor::Uncolored) in.fail(t[1], "vertex colored twice");
            coloring[v] = cell_of(in.player(t[2]));
        } else if (t[0].text == "p") {
            in.fail(t[0], "duplicate header");
        } else {
            in.fail(t[0], "unknown line type '" + std::string(t[0].text) + "'");
        }
    }
    return ColoredGraph(n, edges, std::move(coloring));
}

std::string serialize_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.color(v) == CellColor::LeftOwned) out << "c " << v << " L\n";
        if (g.color(v) == CellColor::RightOwned) out << "c " << v << " R\n";
    }
    return out.str();
}

BtclMachine parse_machine(std::string_view text) {
    LineReader in(text);
    std::vector<Token> t;
    const std::size_t n = read_header(in, t);
    std::vector<BtclArc> arcs;
    std::optional<std::size_t> goal;
    std::vector<VertexKind> kinds;
    std::size_t goal_line = 0;
    while (in.next(t)) {
        if (t[0].text == "a") {
            in.arity(t, 5);
            BtclArc a;
            a.tail = in.vertex(t[1], n);
            a.head = in.vertex(t[2], n);
            a.owner = in.player(t[3]);
            auto w = in.number(t[4]);
            if (w != 1 && w != 2) in.fail(t[4], "arc weight must be 1 or 2");
            a.weight = static_cast<int>(w);
            if (a.tail == a.head) in.fail(t[2], "self-loop arc");
            arcs.push_back(a);
        } else if (t[0].text == "g") {
            in.arity(t, 2);
            if (goal) in.fail(t[0], "duplicate goal line");
            goal = static_cast<std::size_t>(in.number(t[1]));
            goal_line = in.line();
        } else if (t[0].text == "t") {
            in.arity(t, 3);
            VertexId v = in.vertex(t[1], n);
            if (kinds.empty()) kinds.assign(n, VertexKind::Unspecified);
            try {
                kinds[v] = vertex_kind_from_string(t[2].text);
            } catch (const Error& e) {
                in.fail(t[2], e.what());
            }
        } else {
            in.fail(t[0], "unknown line type '" + std::string(t[0].text) + "'");
        }
    }
    if (!goal) throw ParseError(in.line(), 1, "missing 'g <arc>' goal line");
    try {
        return BtclMachine(n, std::move(arcs), *goal, std::move(kinds));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(goal_line, 1, e.what());
    }
}

std::string serialize_machine(const BtclMachine& m) {
    std::ostringstream out;
    out << "p " << m.vertex_count() << '\n';
    for (const BtclArc& a : m.arcs()) {
        // Arcs are written in their initial orientation.
        VertexId tail = a.flipped ? a.head : a.tail;
        VertexId head = a.flipped ? a.tail : a.head;
        out << "a " << tail << ' ' << head << ' ' << to_char(a.owner) << ' ' << a.weight << '\n';
    }
    out << "g " << m.goal_arc() << '\n';
    for (VertexId v = 0; v < m.kinds().size(); ++v) {
        if (m.kinds()[v] != VertexKind::Unspecified) out << "t " << v << ' ' << to_string(m.kinds()[v]) << '\n';
    }
    for (std::size_t i = 0; i < m.arcs().size(); ++i) {
        if (m.arcs()[i].flipped) out << "f " << i << '\n';
    }
    if (m.consecutive_passes() != 0) out << "s " << m.consecutive_passes() << '\n';
    return out.str();
}

}  // namespace placement
