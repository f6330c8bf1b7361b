#ifndef GAUT_ORACLE_HPP
#define GAUT_ORACLE_HPP

#include <set>
#include <vector>

#include "gaut/automaton.hpp"
#include "gaut/rational.hpp"

namespace gaut {

// Hard limits for the brute-force enumerations below: they throw Error
// instead of thrashing.
inline constexpr int kMaxBound = 8;
inline constexpr std::size_t kElementGuard = 1000000;

// A finite, exhaustively enumerated slice of a language: every member word
// of length up to the bound, well-formed over one alphabet, in canonical
// order (source, length, word, target).
class LanguageSet {
public:
    LanguageSet(GraphAlphabet alphabet, int bound);

    const GraphAlphabet& alphabet() const { return alphabet_; }
    int bound() const { return bound_; }
    const std::set<Morphism>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Morphism& m) const { return elements_.count(m) != 0; }

    // Throws Error when m is too long, not well-formed, or the guard trips.
    void insert(Morphism m);

private:
    GraphAlphabet alphabet_;
    int bound_;
    std::set<Morphism> elements_;
};

// Every typed word of length <= maxlen: all identities plus all walk labels.
LanguageSet enum_morphisms(const GraphAlphabet& a, int maxlen);

// Every accepted word of length <= maxlen, by direct path enumeration
// (breadth-first over (state, word) pairs, independent of accepts()).
// Requires silent-free.
LanguageSet bounded_language(const Automaton& a, int maxlen);

// The words of length <= maxlen denoted by e, by direct evaluation of the
// set semantics with the length cutoff applied throughout.
LanguageSet bounded_rat(const GraphAlphabet& a, const RatExpr& e, int maxlen);

struct EqualityReport {
    bool equal = true;
    std::vector<Morphism> only_left;   // at most 10 witnesses
    std::vector<Morphism> only_right;  // at most 10 witnesses
};

// Set equality of two slices; they must agree on alphabet and bound.
EqualityReport bounded_equal(const LanguageSet& lhs, const LanguageSet& rhs);

}  // namespace gaut

#endif
