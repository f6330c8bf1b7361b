#ifndef GAUT_OPS_HPP
#define GAUT_OPS_HPP

#include "gaut/automaton.hpp"

namespace gaut {

// All operations expect valid automata; binary operations additionally
// require both arguments to share one alphabet and throw PreconditionError
// otherwise.  Inputs must be silent-free; outputs are silent-free.

// Disjoint sum; state names are prefixed "l." and "r.".
Automaton unite(const Automaton& a1, const Automaton& a2);

// Words of a1 composed with words of a2 (matching endpoints); wired with
// silent bridges that are then eliminated.
Automaton concat(const Automaton& a1, const Automaton& a2);

// One or more repetitions of a's words (composable chains).
Automaton plus(const Automaton& a);

// Product over pairs of same-typed states; accepts the intersection.
// Pair states are named "<name1>,<name2>".
Automaton intersect(const Automaton& a1, const Automaton& a2);

// Subset construction restricted to nonempty uniformly-typed reachable
// subsets.  For each vertex with initial states, the set of all of them is
// the initial subset of that type.  Subset states are named by joining the
// member names with '+'.  The result is deterministic and accepts the same
// language.
Automaton determinize(const Automaton& a);

// Adds, for every vertex without an initial state, a fresh initial state
// "init.<vertex>", and then just enough sink states "sink.<vertex>" that
// every state has an outgoing transition per edge departing its vertex.
// Already-complete automata are returned unchanged.  Preserves L(A).
Automaton complete(const Automaton& a);

// Swaps accepting and non-accepting states.  Requires a deterministic and
// complete; throws PreconditionError otherwise.
Automaton complement(const Automaton& a);

// Left quotient w^-1 L(A): keeps a's states and transitions, making initial
// exactly the states reachable from an initial state by reading w.
Automaton quotient_left(const Automaton& a, const Morphism& w);

// Right quotient L(A) w^-1: accepting become the states from which reading
// w can reach an accepting state.
Automaton quotient_right(const Automaton& a, const Morphism& w);

}  // namespace gaut

#endif
