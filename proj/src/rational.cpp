#include "gaut/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "construct.hpp"
#include "detail.hpp"

namespace gaut {

namespace {

using Node = RatExpr::Node;

}  // namespace

RatExpr RatExpr::empty() {
    static const std::shared_ptr<const Node> n =
        std::make_shared<Node>(Node{Kind::Empty, "", nullptr, nullptr});
    return RatExpr(n);
}

RatExpr RatExpr::atom(std::string edge) {
    return RatExpr(std::make_shared<Node>(
        Node{Kind::Atom, std::move(edge), nullptr, nullptr}));
}

RatExpr RatExpr::id(std::string vertex) {
    return RatExpr(std::make_shared<Node>(
        Node{Kind::Id, std::move(vertex), nullptr, nullptr}));
}

RatExpr RatExpr::alt(RatExpr lhs, RatExpr rhs) {
    if (lhs.is_empty()) return rhs;
    if (rhs.is_empty()) return lhs;
    return RatExpr(std::make_shared<Node>(
        Node{Kind::Union, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

RatExpr RatExpr::seq(RatExpr lhs, RatExpr rhs) {
    if (lhs.is_empty() || rhs.is_empty()) return empty();
    return RatExpr(std::make_shared<Node>(
        Node{Kind::Concat, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

RatExpr RatExpr::plus(RatExpr e) {
    if (e.is_empty()) return e;
    return RatExpr(std::make_shared<Node>(
        Node{Kind::Plus, "", std::move(e.node_), nullptr}));
}

bool operator==(const RatExpr& a, const RatExpr& b) {
    const Node* x = a.raw();
    const Node* y = b.raw();
    if (x == y) return true;
    if (x->kind != y->kind || x->symbol != y->symbol) return false;
    switch (x->kind) {
        case RatExpr::Kind::Empty:
        case RatExpr::Kind::Atom:
        case RatExpr::Kind::Id:
            return true;
        case RatExpr::Kind::Plus:
            return a.child() == b.child();
        default:
            return a.left() == b.left() && a.right() == b.right();
    }
}

namespace {

struct Token {
    enum Kind { Name, Colon, PlusOp, LParen, RParen, End } kind;
    std::string text;
};

bool name_byte(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '@' ||
           c == ',' || c == '+' || c == '-' || c >= 0x80;
}

std::vector<Token> lex_expr(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
        } else if (c == '(') {
            out.push_back({Token::LParen, "("});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::RParen, ")"});
            ++i;
        } else if (c == ':') {
            out.push_back({Token::Colon, ":"});
            ++i;
        } else if (c == '^') {
            if (i + 1 >= text.size() || text[i + 1] != '+')
                throw ParseError("expected '^+'");
            out.push_back({Token::PlusOp, "^+"});
            i += 2;
        } else if (name_byte(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && name_byte(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Name, std::string(text.substr(i, j - i))});
            i = j;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in expression");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

class ExprParser {
public:
    ExprParser(const GraphAlphabet& a, std::vector<Token> tokens)
        : alpha_(a), tokens_(std::move(tokens)) {}

    RatExpr parse() {
        RatExpr e = expr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected trailing input '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    bool at_op(const char* sym) const {
        return peek().kind == Token::Name && peek().text == sym;
    }

    RatExpr expr() {
        RatExpr e = term();
        while (at_op("+")) {
            take();
            e = RatExpr::alt(std::move(e), term());
        }
        return e;
    }

    RatExpr term() {
        RatExpr e = factor();
        while (at_op(".")) {
            take();
            e = RatExpr::seq(std::move(e), factor());
        }
        return e;
    }

    RatExpr factor() {
        RatExpr e = atom();
        while (peek().kind == Token::PlusOp) {
            take();
            e = RatExpr::plus(std::move(e));
        }
        return e;
    }

    RatExpr atom() {
        Token t = take();
        if (t.kind == Token::LParen) {
            RatExpr e = expr();
            if (take().kind != Token::RParen) throw ParseError("expected ')'");
            return e;
        }
        if (t.kind != Token::Name)
            throw ParseError("expected an atom, got '" + t.text + "'");
        if (t.text == "+" || t.text == "." || t.text == "0+" || t.text == "+0")
            throw ParseError("misplaced operator '" + t.text + "'");
        if (t.text == "0") return RatExpr::empty();
        if (t.text == "id" && peek().kind == Token::Colon) {
            take();
            Token v = take();
            if (v.kind != Token::Name)
                throw ParseError("expected a vertex name after 'id:'");
            if (!alpha_.has_vertex(v.text))
                throw ParseError("unknown vertex '" + v.text + "'");
            return RatExpr::id(v.text);
        }
        if (!alpha_.has_edge(t.text))
            throw ParseError("unknown edge '" + t.text + "'");
        return RatExpr::atom(t.text);
    }

    const GraphAlphabet& alpha_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_expr(const GraphAlphabet& a, std::string_view text) {
    return ExprParser(a, lex_expr(text)).parse();
}

namespace {

int precedence(const RatExpr& e) {
    switch (e.kind()) {
        case RatExpr::Kind::Union: return 1;
        case RatExpr::Kind::Concat: return 2;
        case RatExpr::Kind::Plus: return 3;
        default: return 4;
    }
}

void print_into(const RatExpr& e, int minprec, std::string& out) {
    bool parens = precedence(e) < minprec;
    if (parens) out += "(";
    switch (e.kind()) {
        case RatExpr::Kind::Empty:
            out += "0";
            break;
        case RatExpr::Kind::Atom:
            out += e.symbol();
            break;
        case RatExpr::Kind::Id:
            out += "id:" + e.symbol();
            break;
        case RatExpr::Kind::Union:
            print_into(e.left(), 1, out);
            out += " + ";
            print_into(e.right(), 2, out);
            break;
        case RatExpr::Kind::Concat:
            print_into(e.left(), 2, out);
            out += " . ";
            print_into(e.right(), 3, out);
            break;
        case RatExpr::Kind::Plus:
            print_into(e.child(), 3, out);
            out += "^+";
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string print_expr(const RatExpr& e) {
    std::string out;
    print_into(e, 0, out);
    return out;
}

namespace {

Automaton compile_raw(const GraphAlphabet& a, const RatExpr& e, int& counter) {
    auto fresh = [&counter] { return "s" + std::to_string(counter++); };
    switch (e.kind()) {
        case RatExpr::Kind::Empty:
            return Automaton(a);
        case RatExpr::Kind::Atom: {
            const Edge& edge = a.edge(e.symbol());
            std::string p = fresh(), q = fresh();
            return Automaton(a,
                             {{p, edge.src, true, false}, {q, edge.dst, false, true}},
                             {{0, 1, edge.name, false}});
        }
        case RatExpr::Kind::Id: {
            if (!a.has_vertex(e.symbol())) throw Error("unknown vertex '" + e.symbol() + "'");
            return Automaton(a, {{fresh(), e.symbol(), true, true}}, {});
        }
        case RatExpr::Kind::Union:
            return detail::disjoint_append(compile_raw(a, e.left(), counter),
                                           compile_raw(a, e.right(), counter));
        case RatExpr::Kind::Concat:
            return detail::concat_silent(compile_raw(a, e.left(), counter),
                                         compile_raw(a, e.right(), counter));
        case RatExpr::Kind::Plus:
        default:
            return detail::plus_silent(compile_raw(a, e.child(), counter));
    }
}

}  // namespace

Automaton compile_keep_silent(const GraphAlphabet& a, const RatExpr& e) {
    int counter = 0;
    return compile_raw(a, e, counter);
}

Automaton compile(const GraphAlphabet& a, const RatExpr& e) {
    return eliminate_silent(compile_keep_silent(a, e));
}

Automaton eliminate_silent(const Automaton& a) {
    if (!a.has_silent()) return a;
    std::size_t n = a.state_count();
    // Forward closure under silent moves, one source state at a time.
    std::vector<std::vector<int>> closure(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{static_cast<int>(q)};
        seen[q] = 1;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            closure[q].push_back(p);
            for (const Transition& t : a.transitions())
                if (t.silent && t.src == p && !seen[t.dst]) {
                    seen[t.dst] = 1;
                    stack.push_back(t.dst);
                }
        }
    }
    std::vector<State> states = a.states();
    for (std::size_t q = 0; q < n; ++q) {
        bool acc = false;
        for (int p : closure[q]) acc = acc || states[p].accepting;
        states[q].accepting = acc;
    }
    std::vector<Transition> transitions;
    for (std::size_t q = 0; q < n; ++q)
        for (int p : closure[q])
            for (const Transition& t : a.transitions())
                if (!t.silent && t.src == p)
                    transitions.push_back({static_cast<int>(q), t.dst, t.label, false});
    return Automaton(a.alphabet(), std::move(states), std::move(transitions));
}

namespace {

// Sequential composition inside the solver.  Every label produced here
// denotes words typed src-vertex -> dst-vertex, so composing with the
// identity at the junction vertex is a no-op and can be dropped.
RatExpr seq_typed(RatExpr x, RatExpr y) {
    if (x.kind() == RatExpr::Kind::Id) return y;
    if (y.kind() == RatExpr::Kind::Id) return x;
    return RatExpr::seq(std::move(x), std::move(y));
}

using EdgeMap = std::map<std::pair<int, int>, RatExpr>;

void merge_edge(EdgeMap& edges, int src, int dst, RatExpr label) {
    auto it = edges.find({src, dst});
    if (it == edges.end())
        edges.emplace(std::make_pair(src, dst), std::move(label));
    else
        it->second = RatExpr::alt(it->second, std::move(label));
}

RatExpr lookup(const EdgeMap& edges, int src, int dst) {
    auto it = edges.find({src, dst});
    return it == edges.end() ? RatExpr::empty() : it->second;
}

// Identity at v unioned with the iterated loop language.
RatExpr loop_closure(const std::string& vertex, const RatExpr& loops) {
    return RatExpr::alt(RatExpr::id(vertex), RatExpr::plus(loops));
}

RatExpr solve_pair(const Automaton& t, const EdgeMap& base, int i, int f) {
    EdgeMap edges = base;
    std::vector<char> active(t.state_count(), 1);
    while (true) {
        int best = -1;
        long best_cost = 0;
        for (std::size_t q = 0; q < t.state_count(); ++q) {
            if (!active[q] || static_cast<int>(q) == i || static_cast<int>(q) == f)
                continue;
            long indeg = 0, outdeg = 0;
            for (const auto& [key, label] : edges) {
                if (key.second == static_cast<int>(q) && key.first != key.second) ++indeg;
                if (key.first == static_cast<int>(q) && key.first != key.second) ++outdeg;
            }
            long cost = indeg * outdeg;
            if (best < 0 || cost < best_cost ||
                (cost == best_cost &&
                 t.states()[q].name < t.states()[best].name)) {
                best = static_cast<int>(q);
                best_cost = cost;
            }
        }
        if (best < 0) break;

        RatExpr self = lookup(edges, best, best);
        RatExpr w = self.is_empty() ? RatExpr::id(t.states()[best].vertex)
                                    : loop_closure(t.states()[best].vertex, self);
        std::vector<std::pair<int, RatExpr>> in, out;
        for (const auto& [key, label] : edges) {
            if (key.second == best && key.first != best) in.emplace_back(key.first, label);
            if (key.first == best && key.second != best) out.emplace_back(key.second, label);
        }
        for (auto it = edges.begin(); it != edges.end();)
            if (it->first.first == best || it->first.second == best)
                it = edges.erase(it);
            else
                ++it;
        for (const auto& [s, ls] : in)
            for (const auto& [d, ld] : out)
                merge_edge(edges, s, d, seq_typed(seq_typed(ls, w), ld));
        active[best] = 0;
    }

    if (i == f)
        return loop_closure(t.states()[i].vertex, lookup(edges, i, i));

    RatExpr l_if = lookup(edges, i, f);
    if (l_if.is_empty()) return RatExpr::empty();
    RatExpr w2 = loop_closure(t.states()[f].vertex, lookup(edges, f, f));
    RatExpr core = RatExpr::alt(
        lookup(edges, i, i),
        seq_typed(seq_typed(l_if, w2), lookup(edges, f, i)));
    RatExpr head = loop_closure(t.states()[i].vertex, core);
    return seq_typed(seq_typed(head, l_if), w2);
}

}  // namespace

RatExpr to_rational(const Automaton& a) {
    if (a.has_silent())
        throw PreconditionError("to_rational: silent transitions present (eliminate them first)");
    Automaton t = trim(a);
    if (t.state_count() == 0) return RatExpr::empty();

    EdgeMap base;
    for (const Transition& tr : t.transitions())
        merge_edge(base, tr.src, tr.dst, RatExpr::atom(tr.label));

    RatExpr total = RatExpr::empty();
    for (int i : t.initial_states())
        for (int f : t.accepting_states())
            total = RatExpr::alt(total, solve_pair(t, base, i, f));
    return total;
}

}  // namespace gaut
