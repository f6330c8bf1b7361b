#include "gaut/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "construct.hpp"
#include "detail.hpp"
#include "gaut/rational.hpp"

namespace gaut {

namespace {

void require_silent_free(const Automaton& a, const char* op) {
    if (a.has_silent())
        throw PreconditionError(std::string(op) +
                                ": silent transitions present (eliminate them first)");
}

void require_same_alphabet(const Automaton& a1, const Automaton& a2, const char* op) {
    if (!(a1.alphabet() == a2.alphabet()))
        throw PreconditionError(std::string(op) + ": automata are over different alphabets");
}

}  // namespace

Automaton unite(const Automaton& a1, const Automaton& a2) {
    require_same_alphabet(a1, a2, "union");
    require_silent_free(a1, "union");
    require_silent_free(a2, "union");
    return detail::disjoint_append(detail::renamed(a1, "l."), detail::renamed(a2, "r."));
}

Automaton concat(const Automaton& a1, const Automaton& a2) {
    require_same_alphabet(a1, a2, "concat");
    require_silent_free(a1, "concat");
    require_silent_free(a2, "concat");
    return eliminate_silent(
        detail::concat_silent(detail::renamed(a1, "l."), detail::renamed(a2, "r.")));
}

Automaton plus(const Automaton& a) {
    require_silent_free(a, "plus");
    return eliminate_silent(detail::plus_silent(a));
}

Automaton intersect(const Automaton& a1, const Automaton& a2) {
    require_same_alphabet(a1, a2, "intersect");
    require_silent_free(a1, "intersect");
    require_silent_free(a2, "intersect");
    detail::NameAllocator names;
    std::map<std::pair<int, int>, int> index;
    std::vector<State> states;
    for (std::size_t i = 0; i < a1.state_count(); ++i)
        for (std::size_t j = 0; j < a2.state_count(); ++j) {
            const State& q1 = a1.states()[i];
            const State& q2 = a2.states()[j];
            if (q1.vertex != q2.vertex) continue;
            index[{static_cast<int>(i), static_cast<int>(j)}] =
                static_cast<int>(states.size());
            states.push_back({names.claim(q1.name + "," + q2.name), q1.vertex,
                              q1.initial && q2.initial,
                              q1.accepting && q2.accepting});
        }
    std::vector<Transition> transitions;
    for (const Transition& t1 : a1.transitions())
        for (const Transition& t2 : a2.transitions()) {
            if (t1.label != t2.label) continue;
            auto s = index.find({t1.src, t2.src});
            auto d = index.find({t1.dst, t2.dst});
            if (s == index.end() || d == index.end()) continue;
            transitions.push_back({s->second, d->second, t1.label, false});
        }
    return Automaton(a1.alphabet(), std::move(states), std::move(transitions));
}

Automaton determinize(const Automaton& a) {
    require_silent_free(a, "determinize");
    // Subsets are kept as sorted index vectors; their display names join the
    // member names in name order.
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> subsets;
    std::vector<State> states;
    std::vector<Transition> transitions;
    detail::NameAllocator names;

    auto subset_name = [&](const std::vector<int>& subset) {
        std::vector<std::string> member_names;
        for (int q : subset) member_names.push_back(a.states()[q].name);
        std::sort(member_names.begin(), member_names.end());
        std::string joined;
        for (std::size_t i = 0; i < member_names.size(); ++i) {
            if (i) joined += "+";
            joined += member_names[i];
        }
        return names.claim(joined);
    };

    auto intern = [&](std::vector<int> subset, const std::string& vertex,
                      bool initial) -> int {
        auto it = index.find(subset);
        if (it != index.end()) return it->second;
        bool accepting = false;
        for (int q : subset) accepting = accepting || a.states()[q].accepting;
        int id = static_cast<int>(states.size());
        states.push_back({subset_name(subset), vertex, initial, accepting});
        index.emplace(subset, id);
        subsets.push_back(std::move(subset));
        return id;
    };

    std::deque<int> queue;
    for (const std::string& v : a.alphabet().vertices()) {
        std::vector<int> iv;
        for (std::size_t q = 0; q < a.state_count(); ++q)
            if (a.states()[q].initial && a.states()[q].vertex == v)
                iv.push_back(static_cast<int>(q));
        if (!iv.empty()) queue.push_back(intern(std::move(iv), v, true));
    }
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        std::vector<int> members = subsets[cur];
        const std::string& vertex = states[cur].vertex;
        for (const Edge* e : a.alphabet().edges_from(vertex)) {
            std::set<int> next;
            for (const Transition& t : a.transitions())
                if (t.label == e->name &&
                    std::binary_search(members.begin(), members.end(), t.src))
                    next.insert(t.dst);
            if (next.empty()) continue;
            std::vector<int> subset(next.begin(), next.end());
            bool fresh = index.find(subset) == index.end();
            int id = intern(std::move(subset), e->dst, false);
            if (fresh) queue.push_back(id);
            transitions.push_back({cur, id, e->name, false});
        }
    }
    return Automaton(a.alphabet(), std::move(states), std::move(transitions));
}

Automaton complete(const Automaton& a) {
    require_silent_free(a, "complete");
    if (is_complete(a)) return a;
    const GraphAlphabet& alpha = a.alphabet();
    detail::NameAllocator names;
    for (const State& q : a.states()) names.reserve(q.name);

    std::vector<State> states = a.states();
    std::set<std::string> has_initial;
    for (const State& q : a.states())
        if (q.initial) has_initial.insert(q.vertex);
    for (const std::string& v : alpha.vertices())
        if (!has_initial.count(v))
            states.push_back({names.claim("init." + v), v, true, false});

    // Vertices that must receive a sink: targets of uncovered edges, closed
    // under the edges departing a sink.
    std::set<std::pair<int, std::string>> covered;
    for (const Transition& t : a.transitions()) covered.emplace(t.src, t.label);
    std::set<std::string> need;
    for (std::size_t q = 0; q < states.size(); ++q)
        for (const Edge* e : alpha.edges_from(states[q].vertex))
            if (!covered.count({static_cast<int>(q), e->name})) need.insert(e->dst);
    for (bool grew = true; grew;) {
        grew = false;
        for (const std::string& v : need)
            for (const Edge* e : alpha.edges_from(v))
                if (need.insert(e->dst).second) grew = true;
    }

    std::size_t first_sink = states.size();
    std::map<std::string, int> sink_of;
    for (const std::string& v : need) {
        sink_of[v] = static_cast<int>(states.size());
        states.push_back({names.claim("sink." + v), v, false, false});
    }

    std::vector<Transition> transitions = a.transitions();
    for (std::size_t q = 0; q < states.size(); ++q)
        for (const Edge* e : alpha.edges_from(states[q].vertex))
            if (q >= first_sink || !covered.count({static_cast<int>(q), e->name}))
                transitions.push_back({static_cast<int>(q), sink_of.at(e->dst),
                                       e->name, false});
    return Automaton(alpha, std::move(states), std::move(transitions));
}

Automaton complement(const Automaton& a) {
    require_silent_free(a, "complement");
    if (!is_deterministic(a))
        throw PreconditionError("complement: automaton is not deterministic");
    if (!is_complete(a))
        throw PreconditionError("complement: automaton is not complete");
    std::vector<State> states = a.states();
    for (State& q : states) q.accepting = !q.accepting;
    return Automaton(a.alphabet(), std::move(states), a.transitions());
}

namespace {

void require_word(const Automaton& a, const Morphism& w, const char* op) {
    if (!well_formed(a.alphabet(), w))
        throw PreconditionError(std::string(op) +
                                ": word is not well-formed over the automaton's alphabet");
}

}  // namespace

Automaton quotient_left(const Automaton& a, const Morphism& w) {
    require_silent_free(a, "quotient_left");
    require_word(a, w, "quotient_left");
    std::vector<char> cur(a.state_count(), 0);
    for (std::size_t q = 0; q < a.state_count(); ++q)
        if (a.states()[q].initial && a.states()[q].vertex == w.source) cur[q] = 1;
    for (const std::string& letter : w.word) {
        std::vector<char> next(a.state_count(), 0);
        for (const Transition& t : a.transitions())
            if (t.label == letter && cur[t.src]) next[t.dst] = 1;
        cur = std::move(next);
    }
    std::vector<State> states = a.states();
    for (std::size_t q = 0; q < states.size(); ++q) states[q].initial = cur[q];
    return Automaton(a.alphabet(), std::move(states), a.transitions());
}

Automaton quotient_right(const Automaton& a, const Morphism& w) {
    require_silent_free(a, "quotient_right");
    require_word(a, w, "quotient_right");
    std::vector<char> cur(a.state_count(), 0);
    for (std::size_t q = 0; q < a.state_count(); ++q)
        if (a.states()[q].accepting) cur[q] = 1;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        std::vector<char> prev(a.state_count(), 0);
        for (const Transition& t : a.transitions())
            if (t.label == *it && cur[t.dst]) prev[t.src] = 1;
        cur = std::move(prev);
    }
    std::vector<State> states = a.states();
    for (std::size_t q = 0; q < states.size(); ++q)
        states[q].accepting = cur[q] && (!w.word.empty() || states[q].vertex == w.source);
    return Automaton(a.alphabet(), std::move(states), a.transitions());
}

}  // namespace gaut
