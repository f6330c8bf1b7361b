#ifndef GAUT_MINIMIZE_HPP
#define GAUT_MINIMIZE_HPP

#include <string>
#include <utility>
#include <vector>

#include "gaut/automaton.hpp"

namespace gaut {

// Coarsest partition of the states that separates by vertex label and
// acceptance and is stable under the transitions.
struct NerodePartition {
    std::vector<std::vector<int>> blocks;  // sorted state indices
    std::vector<int> block_of;             // state index -> block index
};

// Requires a valid, silent-free, deterministic and trimmed; throws
// PreconditionError otherwise.  Two states land in one block exactly when
// no word distinguishes them.
NerodePartition nerode_partition(const Automaton& a);

// The canonical machine of L(A): the quotient of the trimmed subset
// automaton by its Nerode partition.  Accepts the same language; no two
// distinct languages yield machines of different behavior, and re-applying
// changes nothing (up to renaming).  Requires silent-free.
Automaton minimize(const Automaton& a);

struct SuffixQuotients {
    std::size_t count = 0;             // distinct nonempty left quotients
    std::vector<Morphism> witnesses;   // one witnessing word per quotient
};

// Counts the distinct nonempty languages of the form w^-1 L(A), together
// with a shortest witness word reaching each.  Requires silent-free.
SuffixQuotients suffix_quotients(const Automaton& a);

// A structure-preserving map between automata over one alphabet: state
// names of a1 paired with their images in a2.
struct AutMorphism {
    std::vector<std::pair<std::string, std::string>> mapping;  // sorted by source name
};

// The unique candidate map from a1 into a2 built by following transitions
// from the initial states, then checked to preserve vertex labels, initial
// and accepting membership, and every transition.  Expects every a1 state
// reachable and a2 deterministic (so images are forced); throws
// PreconditionError when no such map exists.
AutMorphism find_morphism(const Automaton& a1, const Automaton& a2);

// True when a is deterministic, trimmed and already as small as its
// canonical machine.
bool check_minimal(const Automaton& a);

}  // namespace gaut

#endif
