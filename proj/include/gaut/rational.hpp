#ifndef GAUT_RATIONAL_HPP
#define GAUT_RATIONAL_HPP

#include <memory>
#include <string>
#include <string_view>

#include "gaut/automaton.hpp"

namespace gaut {

// Rational expressions over a graph alphabet.  Atoms are edge names,
// identities are written id:<vertex>, 0 is the empty language; the
// operators are union (+), concatenation (.) and iteration (^+, one or
// more repetitions).  There is no empty-word constant and no star: the
// identity at each vertex is its own expression.
//
// The smart constructors apply exactly three simplifications:
//   0^+ = 0,   0.e = e.0 = 0,   0+e = e+0 = e.
class RatExpr {
public:
    enum class Kind { Empty, Atom, Id, Union, Concat, Plus };

    RatExpr() : RatExpr(empty()) {}

    static RatExpr empty();
    static RatExpr atom(std::string edge);
    static RatExpr id(std::string vertex);
    static RatExpr alt(RatExpr lhs, RatExpr rhs);   // union
    static RatExpr seq(RatExpr lhs, RatExpr rhs);   // concatenation
    static RatExpr plus(RatExpr e);

    Kind kind() const;
    bool is_empty() const { return kind() == Kind::Empty; }
    // Atom edge name or Id vertex name.
    const std::string& symbol() const;
    RatExpr left() const;
    RatExpr right() const;
    // Operand of Plus.
    RatExpr child() const;

    friend bool operator==(const RatExpr& a, const RatExpr& b);

    struct Node;
    const Node* raw() const { return node_.get(); }

private:
    explicit RatExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct RatExpr::Node {
    Kind kind;
    std::string symbol;
    std::shared_ptr<const Node> left, right;
};

inline RatExpr::Kind RatExpr::kind() const { return node_->kind; }
inline const std::string& RatExpr::symbol() const { return node_->symbol; }
inline RatExpr RatExpr::left() const { return RatExpr(node_->left); }
inline RatExpr RatExpr::right() const { return RatExpr(node_->right); }
inline RatExpr RatExpr::child() const { return RatExpr(node_->left); }

// Concrete syntax:
//   expr   := term ('+' term)*
//   term   := factor ('.' factor)*
//   factor := atom '^+'*
//   atom   := <edge> | 'id:'<vertex> | '0' | '(' expr ')'
// Operators must be separated from names by whitespace or parentheses,
// since '+', '.' and '0' are themselves legal name characters.  Atom and
// id names must exist in the alphabet.
RatExpr parse_expr(const GraphAlphabet& a, std::string_view text);

// Minimal parentheses; parse_expr(print_expr(e)) reproduces e exactly.
std::string print_expr(const RatExpr& e);

// Automaton with L = the language denoted by e.  Each atom contributes a
// fresh two-state automaton (even for self-loop edges), each identity a
// single initial-and-accepting state; union, concatenation and iteration
// are wired with silent transitions which are removed at the end.
Automaton compile(const GraphAlphabet& a, const RatExpr& e);

// Internal variant used for debugging output: keeps the silent wiring.
Automaton compile_keep_silent(const GraphAlphabet& a, const RatExpr& e);

// Removes silent transitions without changing the language: every state
// inherits the outgoing edges and the acceptance of its forward silent
// closure.  Silent-free inputs are returned unchanged.
Automaton eliminate_silent(const Automaton& a);

// A rational expression denoting L(A), by state elimination.  The automaton
// is trimmed, then solved separately for every (initial, accepting) pair;
// states are eliminated cheapest-first (minimal in-degree times out-degree,
// ties by name).  Requires silent-free.
RatExpr to_rational(const Automaton& a);

}  // namespace gaut

#endif
