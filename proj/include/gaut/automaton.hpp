#ifndef GAUT_AUTOMATON_HPP
#define GAUT_AUTOMATON_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gaut/alphabet.hpp"

namespace gaut {

struct State {
    std::string name;
    std::string vertex;     // type label
    bool initial = false;
    bool accepting = false;

    friend bool operator==(const State& a, const State& b) {
        return a.name == b.name && a.vertex == b.vertex &&
               a.initial == b.initial && a.accepting == b.accepting;
    }
};

// A transition is labeled either by an edge of the alphabet or, when
// silent, by a vertex (an internal no-op move between states of that type).
struct Transition {
    int src = 0;
    int dst = 0;
    std::string label;
    bool silent = false;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.src == b.src && a.dst == b.dst && a.label == b.label &&
               a.silent == b.silent;
    }
};

// A state-labeled automaton over a graph alphabet.  States carry a vertex
// label; transitions reference states by index.  The structure itself does
// not enforce the typing discipline; validate() reports violations.
class Automaton {
public:
    Automaton() = default;
    explicit Automaton(GraphAlphabet alphabet) : alphabet_(std::move(alphabet)) {}
    // Throws Error on duplicate state names or out-of-range transition
    // endpoints.  Transitions are deduplicated and stored sorted.
    Automaton(GraphAlphabet alphabet, std::vector<State> states,
              std::vector<Transition> transitions);

    const GraphAlphabet& alphabet() const { return alphabet_; }
    const std::vector<State>& states() const { return states_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    std::size_t state_count() const { return states_.size(); }
    std::size_t transition_count() const { return transitions_.size(); }

    // Index of the named state, or -1.
    int state_index(const std::string& name) const;
    std::vector<int> initial_states() const;
    std::vector<int> accepting_states() const;
    bool has_silent() const;

    // Structural equality up to state order: same alphabet, same named
    // states with the same labels and flags, same transition set.
    friend bool operator==(const Automaton& a, const Automaton& b);

private:
    GraphAlphabet alphabet_;
    std::vector<State> states_;
    std::vector<Transition> transitions_;
    std::unordered_map<std::string, int> index_;
};

// Every typing violation in A, one message per finding: unknown vertex or
// edge names, transitions whose endpoints' labels do not match the edge's
// endpoints, and silent transitions whose vertex does not match both
// endpoint labels.  Empty result means A is valid.
std::vector<std::string> validate(const Automaton& a);

// Membership of the typed word x in L(A).  Identities are accepted exactly
// when some state of x's type is both initial and accepting.  Requires A
// valid and silent-free and x well-formed over A's alphabet; throws
// PreconditionError otherwise.
bool accepts(const Automaton& a, const Morphism& x);

// At most one initial state per vertex and at most one outgoing transition
// per (state, edge) pair.  Requires silent-free.
bool is_deterministic(const Automaton& a);

// Every vertex has an initial state and every state has an outgoing
// transition for every edge departing its vertex.  Requires silent-free.
bool is_complete(const Automaton& a);

// Restriction to states that lie on some accepting path (reachable from an
// initial state and co-accessible to an accepting one).  Preserves L(A).
Automaton trim(const Automaton& a);

// The automaton whose states are the graph's vertices, all initial and
// accepting, with every edge as a transition; accepts every typed word.
Automaton universal(const GraphAlphabet& a);

struct Endpoints {
    std::vector<std::string> sources;  // vertices where some accepted word starts
    std::vector<std::string> targets;  // vertices where some accepted word ends
};

// Source and target vertex sets of L(A): labels of co-accessible initial
// states and of reachable accepting states.
Endpoints endpoints(const Automaton& a);

// The same machine with state types erased: a plain NFA over the edge
// names.  Requires silent-free.
struct NfaState {
    std::string name;
    bool initial = false;
    bool accepting = false;
};

struct NfaTransition {
    int src = 0;
    int dst = 0;
    std::string label;
};

struct UntypedNfa {
    std::vector<NfaState> states;
    std::vector<NfaTransition> transitions;
};

UntypedNfa untyped(const Automaton& a);

// Graphviz rendering with stable ordering: states sorted by name, labels
// "name:vertex", doublecircle for accepting, an inbound arrow per initial
// state.
std::string to_dot(const Automaton& a);

// Text format:
//   gaut 1
//   use <alphabet file>          (or inline vertex/edge lines)
//   state <name> <vertex> [init] [final]
//   trans <edge> <src> <dst>
//   trans @<vertex> <src> <dst>  (silent)
// Unknown state names in trans lines are parse errors; unknown vertex or
// edge names are kept and reported by validate().  `base_dir` resolves
// relative `use` paths.
Automaton parse_automaton(std::string_view text, const std::string& base_dir = "");
Automaton load_automaton(const std::string& path);
std::string serialize_automaton(const Automaton& a);

// Same format with 'nfa 1' header, no alphabet section and no vertex column.
UntypedNfa parse_nfa(std::string_view text);
std::string serialize_nfa(const UntypedNfa& n);

// Typed-word syntax "<source> : <edge> ... <edge> : <target>"; the empty
// middle segment denotes the identity at the (equal) endpoints.
Morphism parse_word(std::string_view text);
std::string format_word(const Morphism& m);

}  // namespace gaut

#endif
