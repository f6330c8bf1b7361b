#include "gaut/alphabet.hpp"

#include <algorithm>
#include <sstream>

#include "detail.hpp"

namespace gaut {

namespace {

bool ascii_name_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '@' ||
           c == ',' || c == '+' || c == '-';
}

// Accepts the ASCII set above plus the angle brackets U+27E8/U+27E9.
bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size();) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) {
            if (!ascii_name_char(s[i])) return false;
            ++i;
        } else {
            if (i + 2 >= s.size()) return false;
            unsigned char c1 = static_cast<unsigned char>(s[i + 1]);
            unsigned char c2 = static_cast<unsigned char>(s[i + 2]);
            bool open = c == 0xE2 && c1 == 0x9F && c2 == 0xA8;
            bool close = c == 0xE2 && c1 == 0x9F && c2 == 0xA9;
            if (!open && !close) return false;
            i += 3;
        }
    }
    return true;
}

}  // namespace

namespace detail {

void check_name(std::string_view name, const char* what) {
    if (!valid_name(name))
        throw Error(std::string(what) + " name '" + std::string(name) +
                    "' contains characters outside [A-Za-z0-9_.@⟨⟩,+-]");
}

void check_name_parse(std::size_t line, std::string_view name, const char* what) {
    if (!valid_name(name))
        throw ParseError(line, std::string(what) + " name '" + std::string(name) +
                                   "' contains characters outside [A-Za-z0-9_.@⟨⟩,+-]");
}

}  // namespace detail

GraphAlphabet::GraphAlphabet(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        detail::check_name(vertices_[i], "vertex");
        if (i > 0 && vertices_[i] == vertices_[i - 1])
            throw Error("duplicate vertex '" + vertices_[i] + "'");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        detail::check_name(e.name, "edge");
        if (i > 0 && e.name == edges_[i - 1].name)
            throw Error("duplicate edge '" + e.name + "'");
        if (!has_vertex(e.src))
            throw Error("edge '" + e.name + "': undeclared vertex '" + e.src + "'");
        if (!has_vertex(e.dst))
            throw Error("edge '" + e.name + "': undeclared vertex '" + e.dst + "'");
        edge_index_.emplace(e.name, i);
    }
}

bool GraphAlphabet::has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool GraphAlphabet::has_edge(const std::string& name) const {
    return edge_index_.count(name) != 0;
}

const Edge* GraphAlphabet::find_edge(const std::string& name) const {
    auto it = edge_index_.find(name);
    return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const Edge& GraphAlphabet::edge(const std::string& name) const {
    const Edge* e = find_edge(name);
    if (!e) throw Error("unknown edge '" + name + "'");
    return *e;
}

std::vector<const Edge*> GraphAlphabet::edges_from(const std::string& v) const {
    std::vector<const Edge*> out;
    for (const Edge& e : edges_)
        if (e.src == v) out.push_back(&e);
    return out;
}

bool operator<(const Morphism& a, const Morphism& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.target < b.target;
}

bool well_formed(const GraphAlphabet& a, const Morphism& m) {
    if (!a.has_vertex(m.source) || !a.has_vertex(m.target)) return false;
    if (m.word.empty()) return m.source == m.target;
    std::string at = m.source;
    for (const std::string& name : m.word) {
        const Edge* e = a.find_edge(name);
        if (!e || e->src != at) return false;
        at = e->dst;
    }
    return at == m.target;
}

Morphism identity(const GraphAlphabet& a, const std::string& v) {
    if (!a.has_vertex(v)) throw Error("unknown vertex '" + v + "'");
    return Morphism{v, {}, v};
}

Morphism compose(const Morphism& x, const Morphism& y) {
    if (x.target != y.source)
        throw PreconditionError("cannot compose: target '" + x.target +
                                "' differs from source '" + y.source + "'");
    Morphism r{x.source, x.word, y.target};
    r.word.insert(r.word.end(), y.word.begin(), y.word.end());
    return r;
}

GraphAlphabet parse_alphabet(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    bool saw_header = false;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = detail::split_ws(detail::strip_comment(line));
        if (tok.empty()) continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "galph" || tok[1] != "1")
                throw ParseError(lineno, "expected header 'galph 1'");
            saw_header = true;
            continue;
        }
        if (tok[0] == "vertex") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex <name>'");
            detail::check_name_parse(lineno, tok[1], "vertex");
            if (std::find(vertices.begin(), vertices.end(), tok[1]) != vertices.end())
                throw ParseError(lineno, "duplicate vertex '" + tok[1] + "'");
            vertices.push_back(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <name> <src> <dst>'");
            detail::check_name_parse(lineno, tok[1], "edge");
            for (int i = 2; i <= 3; ++i)
                if (std::find(vertices.begin(), vertices.end(), tok[i]) == vertices.end())
                    throw ParseError(lineno, "undeclared vertex '" + tok[i] + "'");
            for (const Edge& e : edges)
                if (e.name == tok[1])
                    throw ParseError(lineno, "duplicate edge '" + tok[1] + "'");
            edges.push_back(Edge{tok[1], tok[2], tok[3]});
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!saw_header) throw ParseError(lineno, "missing header 'galph 1'");
    return GraphAlphabet(std::move(vertices), std::move(edges));
}

std::string serialize_alphabet(const GraphAlphabet& a) {
    std::ostringstream out;
    out << "galph 1\n";
    for (const std::string& v : a.vertices()) out << "vertex " << v << "\n";
    for (const Edge& e : a.edges())
        out << "edge " << e.name << " " << e.src << " " << e.dst << "\n";
    return out.str();
}

GraphAlphabet builtin_alphabet(const std::string& name) {
    if (name == "lock")
        return GraphAlphabet({"unsafe", "safe"},
                             {{"a", "unsafe", "unsafe"},
                              {"P", "unsafe", "safe"},
                              {"V", "safe", "unsafe"},
                              {"b", "safe", "safe"}});
    if (name == "types")
        return GraphAlphabet({"int", "uint", "float"},
                             {{"abs", "int", "uint"},
                              {"neg", "uint", "int"},
                              {"sqrt", "uint", "float"},
                              {"round", "float", "int"}});
    throw Error("unknown builtin alphabet '" + name + "' (expected 'lock' or 'types')");
}

namespace {

std::string seq_vertex(const std::vector<std::string>& seq) {
    std::string s = "⟨";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += seq[i];
    }
    return s + "⟩";
}

std::string seq_suffix(const std::vector<std::string>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += seq[i];
    }
    return s;
}

bool valid_event(const std::string& e) {
    if (e.empty()) return false;
    for (char c : e)
        if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_'))
            return false;
    return true;
}

}  // namespace

GraphAlphabet st_alphabet(const std::vector<std::string>& events, int depth) {
    if (depth < 0) throw Error("depth must be >= 0");
    for (const std::string& e : events)
        if (!valid_event(e))
            throw Error("event label '" + e + "' must match [A-Za-z0-9_]+");
    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
            if (events[i] == events[j])
                throw Error("duplicate event label '" + events[i] + "'");

    // Sequences of running events, by length.
    std::vector<std::vector<std::string>> seqs{{}};
    std::size_t level_start = 0;
    for (int len = 1; len <= depth; ++len) {
        std::size_t level_end = seqs.size();
        for (std::size_t i = level_start; i < level_end; ++i)
            for (const std::string& e : events) {
                std::vector<std::string> next = seqs[i];
                next.push_back(e);
                seqs.push_back(std::move(next));
            }
        level_start = level_end;
    }

    std::vector<std::string> vertices;
    for (const auto& s : seqs) vertices.push_back(seq_vertex(s));

    std::vector<Edge> alpha_edges;
    for (const auto& s : seqs) {
        // Starters: insert an event at any position, growing the sequence.
        if (static_cast<int>(s.size()) < depth) {
            for (std::size_t p = 0; p <= s.size(); ++p)
                for (const std::string& e : events) {
                    std::vector<std::string> next = s;
                    next.insert(next.begin() + p, e);
                    alpha_edges.push_back(Edge{
                        "S" + std::to_string(p) + "." + e + "@" + seq_suffix(s),
                        seq_vertex(s), seq_vertex(next)});
                }
        }
        // Terminators: delete the event at any position.
        for (std::size_t p = 0; p < s.size(); ++p) {
            std::vector<std::string> next = s;
            next.erase(next.begin() + p);
            alpha_edges.push_back(Edge{"T" + std::to_string(p) + "@" + seq_suffix(s),
                                       seq_vertex(s), seq_vertex(next)});
        }
    }
    return GraphAlphabet(std::move(vertices), std::move(alpha_edges));
}

}  // namespace gaut
