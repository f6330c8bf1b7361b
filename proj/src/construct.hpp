#ifndef GAUT_SRC_CONSTRUCT_HPP
#define GAUT_SRC_CONSTRUCT_HPP

#include "gaut/automaton.hpp"

namespace gaut::detail {

// Copy with every state name prefixed.
Automaton renamed(const Automaton& a, const std::string& prefix);

// Disjoint sum of two automata over the same alphabet; state names must
// not clash.
Automaton disjoint_append(const Automaton& a1, const Automaton& a2);

// Concatenation wiring, silent transitions left in place: initial states
// of the result are those of a1, accepting states those of a2, plus a
// silent bridge from every accepting state of a1 to every same-typed
// initial state of a2.
Automaton concat_silent(const Automaton& a1, const Automaton& a2);

// Iteration wiring: a silent bridge from every accepting state to every
// same-typed initial state.
Automaton plus_silent(const Automaton& a);

}  // namespace gaut::detail

#endif
