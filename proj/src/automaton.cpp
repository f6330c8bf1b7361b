#include "gaut/automaton.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "detail.hpp"

namespace gaut {

namespace {

bool transition_less(const Transition& a, const Transition& b) {
    return std::tie(a.src, a.label, a.silent, a.dst) <
           std::tie(b.src, b.label, b.silent, b.dst);
}

}  // namespace

Automaton::Automaton(GraphAlphabet alphabet, std::vector<State> states,
                     std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      transitions_(std::move(transitions)) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        detail::check_name(states_[i].name, "state");
        if (!index_.emplace(states_[i].name, static_cast<int>(i)).second)
            throw Error("duplicate state name '" + states_[i].name + "'");
    }
    for (const Transition& t : transitions_) {
        if (t.src < 0 || t.src >= static_cast<int>(states_.size()) ||
            t.dst < 0 || t.dst >= static_cast<int>(states_.size()))
            throw Error("transition endpoint out of range");
        detail::check_name(t.label, "transition label");
    }
    std::sort(transitions_.begin(), transitions_.end(), transition_less);
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
}

int Automaton::state_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> Automaton::initial_states() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i].initial) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Automaton::accepting_states() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i].accepting) out.push_back(static_cast<int>(i));
    return out;
}

bool Automaton::has_silent() const {
    for (const Transition& t : transitions_)
        if (t.silent) return true;
    return false;
}

bool operator==(const Automaton& a, const Automaton& b) {
    if (!(a.alphabet_ == b.alphabet_)) return false;
    auto states_sorted = [](const Automaton& x) {
        std::vector<State> s = x.states_;
        std::sort(s.begin(), s.end(),
                  [](const State& l, const State& r) { return l.name < r.name; });
        return s;
    };
    if (states_sorted(a) != states_sorted(b)) return false;
    using NamedTrans = std::tuple<std::string, std::string, bool, std::string>;
    auto trans_sorted = [](const Automaton& x) {
        std::vector<NamedTrans> t;
        for (const Transition& tr : x.transitions_)
            t.emplace_back(x.states_[tr.src].name, tr.label, tr.silent,
                           x.states_[tr.dst].name);
        std::sort(t.begin(), t.end());
        return t;
    };
    return trans_sorted(a) == trans_sorted(b);
}

std::vector<std::string> validate(const Automaton& a) {
    std::vector<std::string> out;
    const auto& alpha = a.alphabet();
    const auto& states = a.states();
    for (const State& q : states)
        if (!alpha.has_vertex(q.vertex))
            out.push_back("state '" + q.name + "': unknown vertex '" + q.vertex + "'");
    for (const Transition& t : a.transitions()) {
        const State& src = states[t.src];
        const State& dst = states[t.dst];
        std::string where = "trans '" + (t.silent ? "@" + t.label : t.label) + "' " +
                            src.name + " -> " + dst.name + ": ";
        if (t.silent) {
            if (!alpha.has_vertex(t.label)) {
                out.push_back(where + "unknown vertex '" + t.label + "'");
                continue;
            }
            if (src.vertex != t.label)
                out.push_back(where + "source state has type '" + src.vertex +
                              "', expected '" + t.label + "'");
            if (dst.vertex != t.label)
                out.push_back(where + "target state has type '" + dst.vertex +
                              "', expected '" + t.label + "'");
            continue;
        }
        const Edge* e = alpha.find_edge(t.label);
        if (!e) {
            out.push_back(where + "unknown edge '" + t.label + "'");
            continue;
        }
        if (src.vertex != e->src)
            out.push_back(where + "source state has type '" + src.vertex +
                          "', expected '" + e->src + "'");
        if (dst.vertex != e->dst)
            out.push_back(where + "target state has type '" + dst.vertex +
                          "', expected '" + e->dst + "'");
    }
    return out;
}

namespace {

void require_silent_free(const Automaton& a, const char* op) {
    if (a.has_silent())
        throw PreconditionError(std::string(op) +
                                ": silent transitions present (eliminate them first)");
}

}  // namespace

bool accepts(const Automaton& a, const Morphism& x) {
    require_silent_free(a, "accepts");
    if (!well_formed(a.alphabet(), x))
        throw PreconditionError("word is not well-formed over the automaton's alphabet");
    const auto& states = a.states();
    if (x.is_identity()) {
        for (const State& q : states)
            if (q.initial && q.accepting && q.vertex == x.source) return true;
        return false;
    }
    std::vector<char> cur(states.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].initial && states[i].vertex == x.source) cur[i] = 1, any = true;
    for (const std::string& letter : x.word) {
        if (!any) return false;
        std::vector<char> next(states.size(), 0);
        any = false;
        for (const Transition& t : a.transitions())
            if (t.label == letter && cur[t.src]) next[t.dst] = 1, any = true;
        cur = std::move(next);
    }
    for (std::size_t i = 0; i < states.size(); ++i)
        if (cur[i] && states[i].accepting) return true;
    return false;
}

bool is_deterministic(const Automaton& a) {
    require_silent_free(a, "is_deterministic");
    std::set<std::string> init_vertices;
    for (const State& q : a.states())
        if (q.initial && !init_vertices.insert(q.vertex).second) return false;
    std::set<std::pair<int, std::string>> seen;
    for (const Transition& t : a.transitions())
        if (!seen.emplace(t.src, t.label).second) return false;
    return true;
}

bool is_complete(const Automaton& a) {
    require_silent_free(a, "is_complete");
    const auto& alpha = a.alphabet();
    std::set<std::string> init_vertices;
    for (const State& q : a.states())
        if (q.initial) init_vertices.insert(q.vertex);
    for (const std::string& v : alpha.vertices())
        if (!init_vertices.count(v)) return false;
    std::set<std::pair<int, std::string>> covered;
    for (const Transition& t : a.transitions())
        if (!t.silent) covered.emplace(t.src, t.label);
    for (std::size_t i = 0; i < a.state_count(); ++i)
        for (const Edge* e : alpha.edges_from(a.states()[i].vertex))
            if (!covered.count({static_cast<int>(i), e->name})) return false;
    return true;
}

namespace {

std::vector<char> forward_reachable(const Automaton& a) {
    std::vector<char> seen(a.state_count(), 0);
    std::vector<int> stack;
    for (int q : a.initial_states())
        if (!seen[q]) seen[q] = 1, stack.push_back(q);
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const Transition& t : a.transitions())
            if (t.src == q && !seen[t.dst]) seen[t.dst] = 1, stack.push_back(t.dst);
    }
    return seen;
}

std::vector<char> backward_reachable(const Automaton& a) {
    std::vector<char> seen(a.state_count(), 0);
    std::vector<int> stack;
    for (int q : a.accepting_states())
        if (!seen[q]) seen[q] = 1, stack.push_back(q);
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const Transition& t : a.transitions())
            if (t.dst == q && !seen[t.src]) seen[t.src] = 1, stack.push_back(t.src);
    }
    return seen;
}

}  // namespace

Automaton trim(const Automaton& a) {
    std::vector<char> fwd = forward_reachable(a);
    std::vector<char> bwd = backward_reachable(a);
    std::vector<int> remap(a.state_count(), -1);
    std::vector<State> states;
    for (std::size_t i = 0; i < a.state_count(); ++i)
        if (fwd[i] && bwd[i]) {
            remap[i] = static_cast<int>(states.size());
            states.push_back(a.states()[i]);
        }
    std::vector<Transition> transitions;
    for (const Transition& t : a.transitions())
        if (remap[t.src] >= 0 && remap[t.dst] >= 0)
            transitions.push_back({remap[t.src], remap[t.dst], t.label, t.silent});
    return Automaton(a.alphabet(), std::move(states), std::move(transitions));
}

Automaton universal(const GraphAlphabet& a) {
    std::vector<State> states;
    for (const std::string& v : a.vertices()) states.push_back({v, v, true, true});
    std::vector<Transition> transitions;
    for (const Edge& e : a.edges()) {
        int s = static_cast<int>(std::lower_bound(a.vertices().begin(),
                                                  a.vertices().end(), e.src) -
                                 a.vertices().begin());
        int t = static_cast<int>(std::lower_bound(a.vertices().begin(),
                                                  a.vertices().end(), e.dst) -
                                 a.vertices().begin());
        transitions.push_back({s, t, e.name, false});
    }
    return Automaton(a, std::move(states), std::move(transitions));
}

Endpoints endpoints(const Automaton& a) {
    std::vector<char> fwd = forward_reachable(a);
    std::vector<char> bwd = backward_reachable(a);
    std::set<std::string> sources, targets;
    for (std::size_t i = 0; i < a.state_count(); ++i) {
        if (a.states()[i].initial && bwd[i]) sources.insert(a.states()[i].vertex);
        if (a.states()[i].accepting && fwd[i]) targets.insert(a.states()[i].vertex);
    }
    return Endpoints{{sources.begin(), sources.end()}, {targets.begin(), targets.end()}};
}

UntypedNfa untyped(const Automaton& a) {
    require_silent_free(a, "untyped");
    UntypedNfa n;
    for (const State& q : a.states())
        n.states.push_back({q.name, q.initial, q.accepting});
    for (const Transition& t : a.transitions())
        n.transitions.push_back({t.src, t.dst, t.label});
    return n;
}

std::string to_dot(const Automaton& a) {
    std::vector<int> order(a.state_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int l, int r) {
        return a.states()[l].name < a.states()[r].name;
    });
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    int marker = 0;
    for (int q : order) {
        const State& s = a.states()[q];
        out << "  \"" << s.name << "\" [label=\"" << s.name << ":" << s.vertex << "\"";
        if (s.accepting) out << ", shape=doublecircle";
        out << "];\n";
        if (s.initial) {
            out << "  \"__start" << marker << "\" [shape=point, label=\"\"];\n";
            out << "  \"__start" << marker << "\" -> \"" << s.name << "\";\n";
            ++marker;
        }
    }
    using Row = std::tuple<std::string, std::string, std::string>;
    std::vector<Row> rows;
    for (const Transition& t : a.transitions())
        rows.emplace_back(a.states()[t.src].name,
                          t.silent ? "@" + t.label : t.label,
                          a.states()[t.dst].name);
    std::sort(rows.begin(), rows.end());
    for (const auto& [src, label, dst] : rows)
        out << "  \"" << src << "\" -> \"" << dst << "\" [label=\"" << label << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Automaton parse_automaton(std::string_view text, const std::string& base_dir) {
    bool saw_header = false;
    bool inline_alpha = false;
    std::string use_path;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<State> states;
    std::vector<Transition> transitions;
    std::unordered_map<std::string, int> state_index;

    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = detail::split_ws(detail::strip_comment(line));
        if (tok.empty()) continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "gaut" || tok[1] != "1")
                throw ParseError(lineno, "expected header 'gaut 1'");
            saw_header = true;
            continue;
        }
        if (tok[0] == "use") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'use <path>'");
            if (!use_path.empty()) throw ParseError(lineno, "duplicate 'use' directive");
            if (inline_alpha)
                throw ParseError(lineno, "'use' cannot be mixed with inline vertex/edge lines");
            use_path = tok[1];
        } else if (tok[0] == "vertex") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex <name>'");
            if (!use_path.empty())
                throw ParseError(lineno, "inline vertex/edge lines cannot follow 'use'");
            inline_alpha = true;
            detail::check_name_parse(lineno, tok[1], "vertex");
            if (std::find(vertices.begin(), vertices.end(), tok[1]) != vertices.end())
                throw ParseError(lineno, "duplicate vertex '" + tok[1] + "'");
            vertices.push_back(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <name> <src> <dst>'");
            if (!use_path.empty())
                throw ParseError(lineno, "inline vertex/edge lines cannot follow 'use'");
            inline_alpha = true;
            detail::check_name_parse(lineno, tok[1], "edge");
            for (int i = 2; i <= 3; ++i)
                if (std::find(vertices.begin(), vertices.end(), tok[i]) == vertices.end())
                    throw ParseError(lineno, "undeclared vertex '" + tok[i] + "'");
            for (const Edge& e : edges)
                if (e.name == tok[1]) throw ParseError(lineno, "duplicate edge '" + tok[1] + "'");
            edges.push_back(Edge{tok[1], tok[2], tok[3]});
        } else if (tok[0] == "state") {
            if (tok.size() < 3 || tok.size() > 5)
                throw ParseError(lineno, "expected 'state <name> <vertex> [init] [final]'");
            detail::check_name_parse(lineno, tok[1], "state");
            detail::check_name_parse(lineno, tok[2], "vertex");
            State q{tok[1], tok[2], false, false};
            for (std::size_t i = 3; i < tok.size(); ++i) {
                if (tok[i] == "init")
                    q.initial = true;
                else if (tok[i] == "final")
                    q.accepting = true;
                else
                    throw ParseError(lineno, "unknown state flag '" + tok[i] + "'");
            }
            if (!state_index.emplace(q.name, static_cast<int>(states.size())).second)
                throw ParseError(lineno, "duplicate state '" + q.name + "'");
            states.push_back(std::move(q));
        } else if (tok[0] == "trans") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'trans <label> <src> <dst>'");
            bool silent = !tok[1].empty() && tok[1][0] == '@';
            std::string label = silent ? tok[1].substr(1) : tok[1];
            detail::check_name_parse(lineno, label, "transition label");
            auto s = state_index.find(tok[2]);
            if (s == state_index.end())
                throw ParseError(lineno, "unknown state '" + tok[2] + "'");
            auto d = state_index.find(tok[3]);
            if (d == state_index.end())
                throw ParseError(lineno, "unknown state '" + tok[3] + "'");
            transitions.push_back({s->second, d->second, label, silent});
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!saw_header) throw ParseError(lineno, "missing header 'gaut 1'");

    GraphAlphabet alpha;
    if (!use_path.empty()) {
        std::filesystem::path p(use_path);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        alpha = parse_alphabet(read_file(p.string()));
    } else {
        try {
            alpha = GraphAlphabet(std::move(vertices), std::move(edges));
        } catch (const Error& e) {
            throw ParseError(std::string("invalid alphabet: ") + e.what());
        }
    }
    return Automaton(std::move(alpha), std::move(states), std::move(transitions));
}

Automaton load_automaton(const std::string& path) {
    std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_automaton(read_file(path), dir);
}

std::string serialize_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "gaut 1\n";
    for (const std::string& v : a.alphabet().vertices()) out << "vertex " << v << "\n";
    for (const Edge& e : a.alphabet().edges())
        out << "edge " << e.name << " " << e.src << " " << e.dst << "\n";
    std::vector<int> order(a.state_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int l, int r) {
        return a.states()[l].name < a.states()[r].name;
    });
    for (int q : order) {
        const State& s = a.states()[q];
        out << "state " << s.name << " " << s.vertex;
        if (s.initial) out << " init";
        if (s.accepting) out << " final";
        out << "\n";
    }
    using Row = std::tuple<std::string, std::string, std::string>;
    std::vector<Row> rows;
    for (const Transition& t : a.transitions())
        rows.emplace_back(a.states()[t.src].name,
                          t.silent ? "@" + t.label : t.label,
                          a.states()[t.dst].name);
    std::sort(rows.begin(), rows.end());
    for (const auto& [src, label, dst] : rows)
        out << "trans " << label << " " << src << " " << dst << "\n";
    return out.str();
}

UntypedNfa parse_nfa(std::string_view text) {
    UntypedNfa n;
    std::unordered_map<std::string, int> index;
    bool saw_header = false;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = detail::split_ws(detail::strip_comment(line));
        if (tok.empty()) continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "nfa" || tok[1] != "1")
                throw ParseError(lineno, "expected header 'nfa 1'");
            saw_header = true;
            continue;
        }
        if (tok[0] == "state") {
            if (tok.size() < 2 || tok.size() > 4)
                throw ParseError(lineno, "expected 'state <name> [init] [final]'");
            detail::check_name_parse(lineno, tok[1], "state");
            NfaState q{tok[1], false, false};
            for (std::size_t i = 2; i < tok.size(); ++i) {
                if (tok[i] == "init")
                    q.initial = true;
                else if (tok[i] == "final")
                    q.accepting = true;
                else
                    throw ParseError(lineno, "unknown state flag '" + tok[i] + "'");
            }
            if (!index.emplace(q.name, static_cast<int>(n.states.size())).second)
                throw ParseError(lineno, "duplicate state '" + q.name + "'");
            n.states.push_back(std::move(q));
        } else if (tok[0] == "trans") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'trans <label> <src> <dst>'");
            detail::check_name_parse(lineno, tok[1], "transition label");
            auto s = index.find(tok[2]);
            if (s == index.end()) throw ParseError(lineno, "unknown state '" + tok[2] + "'");
            auto d = index.find(tok[3]);
            if (d == index.end()) throw ParseError(lineno, "unknown state '" + tok[3] + "'");
            n.transitions.push_back({s->second, d->second, tok[1]});
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!saw_header) throw ParseError(lineno, "missing header 'nfa 1'");
    return n;
}

std::string serialize_nfa(const UntypedNfa& n) {
    std::ostringstream out;
    out << "nfa 1\n";
    std::vector<int> order(n.states.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return n.states[l].name < n.states[r].name; });
    for (int q : order) {
        const NfaState& s = n.states[q];
        out << "state " << s.name;
        if (s.initial) out << " init";
        if (s.accepting) out << " final";
        out << "\n";
    }
    using Row = std::tuple<std::string, std::string, std::string>;
    std::vector<Row> rows;
    for (const NfaTransition& t : n.transitions)
        rows.emplace_back(n.states[t.src].name, t.label, n.states[t.dst].name);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (const auto& [src, label, dst] : rows)
        out << "trans " << label << " " << src << " " << dst << "\n";
    return out.str();
}

Morphism parse_word(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            parts.push_back(std::string(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (parts.size() != 3)
        throw ParseError("expected '<source> : <edges> : <target>'");
    std::vector<std::string> src = detail::split_ws(parts[0]);
    std::vector<std::string> mid = detail::split_ws(parts[1]);
    std::vector<std::string> dst = detail::split_ws(parts[2]);
    if (src.size() != 1) throw ParseError("expected a single source vertex");
    if (dst.size() != 1) throw ParseError("expected a single target vertex");
    if (mid.empty() && src[0] != dst[0])
        throw ParseError("identity word must have equal source and target");
    return Morphism{src[0], std::move(mid), dst[0]};
}

std::string format_word(const Morphism& m) {
    std::string out = m.source + " :";
    for (const std::string& e : m.word) out += " " + e;
    out += " : " + m.target;
    return out;
}

}  // namespace gaut
