#ifndef GAUT_ALPHABET_HPP
#define GAUT_ALPHABET_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gaut/errors.hpp"

namespace gaut {

// A letter: a named edge of the underlying directed graph.
struct Edge {
    std::string name;
    std::string src;
    std::string dst;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.name == b.name && a.src == b.src && a.dst == b.dst;
    }
};

// A graph alphabet: finite sets of vertices (the types) and of named edges
// (the letters), each edge carrying a source and a target vertex.
// Vertices and edges are kept sorted by name; names are unique.
class GraphAlphabet {
public:
    GraphAlphabet() = default;
    GraphAlphabet(std::vector<std::string> vertices, std::vector<Edge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const std::string& v) const;
    bool has_edge(const std::string& name) const;
    // Returns nullptr when no edge of that name exists.
    const Edge* find_edge(const std::string& name) const;
    // Throws Error when no edge of that name exists.
    const Edge& edge(const std::string& name) const;
    // Edges with the given source vertex, in name order.
    std::vector<const Edge*> edges_from(const std::string& v) const;

    friend bool operator==(const GraphAlphabet& a, const GraphAlphabet& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

// A typed word: a (possibly empty) edge sequence together with explicit
// source and target vertices.  An empty word represents the identity at
// its (then equal) source and target.
struct Morphism {
    std::string source;
    std::vector<std::string> word;
    std::string target;

    bool is_identity() const { return word.empty(); }
    std::size_t length() const { return word.size(); }

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.source == b.source && a.word == b.word && a.target == b.target;
    }
};

// Canonical order: by source, then length, then word (lexicographic),
// then target.  Used for all enumeration and printing.
bool operator<(const Morphism& a, const Morphism& b);

// True when m's endpoints and edges exist in `a` and consecutive edges chain
// (each edge departs from the previous target; an empty word needs
// source == target).
bool well_formed(const GraphAlphabet& a, const Morphism& m);

// The identity word at vertex v.  Throws Error when v is not a vertex of a.
Morphism identity(const GraphAlphabet& a, const std::string& v);

// Concatenation x then y.  Throws PreconditionError unless x.target == y.source.
Morphism compose(const Morphism& x, const Morphism& y);

// Text format:
//   galph 1
//   # comment
//   vertex <name>
//   edge <name> <src> <dst>
// Names match [A-Za-z0-9_.@⟨⟩,+-]+.  Edge endpoints must be declared
// vertices.  Serialization is canonical: vertices then edges, each sorted
// by name.
GraphAlphabet parse_alphabet(std::string_view text);
std::string serialize_alphabet(const GraphAlphabet& a);

// Built-in alphabets: "lock" (vertices unsafe/safe, edges a, P, V, b) and
// "types" (vertices int/uint/float, edges abs, neg, sqrt, round).
// Throws Error on any other name.
GraphAlphabet builtin_alphabet(const std::string& name);

// Starter/terminator alphabet over the given event labels.  Vertices are the
// ordered event sequences of length <= depth, written ⟨⟩, ⟨a⟩, ⟨b,a⟩, ...
// For each sequence w of length < depth, each event x and each position
// p <= |w|, a starter edge "S<p>.<x>@<w joined by commas>" inserts x at
// position p; for each nonempty w and each position p < |w|, a terminator
// edge "T<p>@<w>" deletes position p.  Event labels must match
// [A-Za-z0-9_]+ and be distinct; depth must be >= 0.
GraphAlphabet st_alphabet(const std::vector<std::string>& events, int depth);

}  // namespace gaut

#endif
