#ifndef GAUT_TESTS_SUPPORT_HPP
#define GAUT_TESTS_SUPPORT_HPP

#include <array>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gaut/automaton.hpp"
#include "gaut/oracle.hpp"
#include "gaut/rational.hpp"

namespace support {

inline std::string data_dir() { return GAUT_DATA_DIR; }
inline std::string cli_path() { return GAUT_CLI_PATH; }

struct CliResult {
    int exit_code;
    std::string output;
};

// Runs the command line tool; stderr is discarded.
inline CliResult run_cli(const std::vector<std::string>& args) {
    std::string cmd = "'" + cli_path() + "'";
    for (const std::string& a : args) cmd += " '" + a + "'";
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// ---------------------------------------------------------------------------
// Random structures.  Parallel edges per ordered vertex pair are capped so
// bounded enumerations stay far below the element guard.

inline gaut::GraphAlphabet random_alphabet(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv_dist(1, 4);
    std::uniform_int_distribution<int> ne_dist(0, 8);
    int nv = nv_dist(rng);
    std::vector<std::string> vertices;
    for (int i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
    int ne = ne_dist(rng);
    std::map<std::pair<int, int>, int> per_pair;
    std::vector<gaut::Edge> edges;
    std::uniform_int_distribution<int> v_dist(0, nv - 1);
    for (int i = 0; i < ne; ++i) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            int s = v_dist(rng), d = v_dist(rng);
            if (per_pair[{s, d}] >= 2) continue;
            ++per_pair[{s, d}];
            edges.push_back({"e" + std::to_string(edges.size()), vertices[s], vertices[d]});
            break;
        }
    }
    return gaut::GraphAlphabet(std::move(vertices), std::move(edges));
}

inline gaut::Automaton random_automaton(std::mt19937& rng, const gaut::GraphAlphabet& a,
                                        int max_states = 5, int max_transitions = 12) {
    std::uniform_int_distribution<int> ns_dist(1, max_states);
    std::uniform_int_distribution<int> nt_dist(0, max_transitions);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int ns = ns_dist(rng);
    std::uniform_int_distribution<int> v_dist(0, static_cast<int>(a.vertex_count()) - 1);
    std::vector<gaut::State> states;
    for (int i = 0; i < ns; ++i)
        states.push_back({"q" + std::to_string(i), a.vertices()[v_dist(rng)],
                          coin(rng) < 0.4, coin(rng) < 0.4});
    // Usually give the automaton a chance to accept something.
    if (coin(rng) < 0.85) {
        bool has_init = false, has_acc = false;
        for (const gaut::State& q : states) {
            has_init = has_init || q.initial;
            has_acc = has_acc || q.accepting;
        }
        std::uniform_int_distribution<int> s_dist(0, ns - 1);
        if (!has_init) states[s_dist(rng)].initial = true;
        if (!has_acc) states[s_dist(rng)].accepting = true;
    }
    std::vector<gaut::Transition> transitions;
    if (a.edge_count() > 0) {
        int nt = nt_dist(rng);
        std::uniform_int_distribution<int> e_dist(0, static_cast<int>(a.edge_count()) - 1);
        for (int i = 0; i < nt; ++i) {
            const gaut::Edge& e = a.edges()[e_dist(rng)];
            std::vector<int> srcs, dsts;
            for (int q = 0; q < ns; ++q) {
                if (states[q].vertex == e.src) srcs.push_back(q);
                if (states[q].vertex == e.dst) dsts.push_back(q);
            }
            if (srcs.empty() || dsts.empty()) continue;
            std::uniform_int_distribution<int> s_pick(0, static_cast<int>(srcs.size()) - 1);
            std::uniform_int_distribution<int> d_pick(0, static_cast<int>(dsts.size()) - 1);
            transitions.push_back({srcs[s_pick(rng)], dsts[d_pick(rng)], e.name, false});
        }
    }
    return gaut::Automaton(a, std::move(states), std::move(transitions));
}

inline gaut::RatExpr random_expr(std::mt19937& rng, const gaut::GraphAlphabet& a,
                                 int depth = 4) {
    std::uniform_int_distribution<int> kind_dist(0, 9);
    int k = depth <= 0 ? kind_dist(rng) % 3 : kind_dist(rng);
    std::uniform_int_distribution<int> v_dist(0, static_cast<int>(a.vertex_count()) - 1);
    if (a.edge_count() == 0 && k < 2) k = 1;
    switch (k) {
        case 0: {
            std::uniform_int_distribution<int> e_dist(
                0, static_cast<int>(a.edge_count()) - 1);
            return gaut::RatExpr::atom(a.edges()[e_dist(rng)].name);
        }
        case 1:
            return gaut::RatExpr::id(a.vertices()[v_dist(rng)]);
        case 2:
            return gaut::RatExpr::empty();
        case 3:
        case 4:
        case 5:
            return gaut::RatExpr::alt(random_expr(rng, a, depth - 1),
                                      random_expr(rng, a, depth - 1));
        case 6:
        case 7:
            return gaut::RatExpr::seq(random_expr(rng, a, depth - 1),
                                      random_expr(rng, a, depth - 1));
        default:
            return gaut::RatExpr::plus(random_expr(rng, a, depth - 1));
    }
}

// ---------------------------------------------------------------------------
// Reference set algebra on plain morphism sets, reimplemented here so the
// library's closure operations are checked against something independent.

using MSet = std::set<gaut::Morphism>;

inline MSet elements(const gaut::LanguageSet& s) { return s.elements(); }

inline MSet ref_union(const MSet& a, const MSet& b) {
    MSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline MSet ref_intersection(const MSet& a, const MSet& b) {
    MSet out;
    for (const gaut::Morphism& m : a)
        if (b.count(m)) out.insert(m);
    return out;
}

inline MSet ref_difference(const MSet& a, const MSet& b) {
    MSet out;
    for (const gaut::Morphism& m : a)
        if (!b.count(m)) out.insert(m);
    return out;
}

inline MSet ref_concat(const MSet& a, const MSet& b, int maxlen) {
    MSet out;
    for (const gaut::Morphism& x : a)
        for (const gaut::Morphism& y : b) {
            if (x.target != y.source) continue;
            if (static_cast<int>(x.length() + y.length()) > maxlen) continue;
            gaut::Morphism r{x.source, x.word, y.target};
            r.word.insert(r.word.end(), y.word.begin(), y.word.end());
            out.insert(std::move(r));
        }
    return out;
}

inline MSet ref_plus(const MSet& a, int maxlen) {
    MSet out = a;
    for (bool grew = true; grew;) {
        MSet ext = ref_concat(out, a, maxlen);
        std::size_t before = out.size();
        out.insert(ext.begin(), ext.end());
        grew = out.size() > before;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Independent plain-NFA path enumeration (used to referee the type-erasing
// projection): label sequences of accepting paths, plus the empty word when
// a state is both initial and accepting.

inline std::set<std::vector<std::string>> nfa_words(const gaut::UntypedNfa& n, int maxlen) {
    std::set<std::vector<std::string>> out;
    std::set<std::pair<int, std::vector<std::string>>> seen;
    std::vector<std::pair<int, std::vector<std::string>>> queue;
    for (std::size_t q = 0; q < n.states.size(); ++q)
        if (n.states[q].initial) {
            seen.insert({static_cast<int>(q), {}});
            queue.push_back({static_cast<int>(q), {}});
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [q, w] = queue[head];
        if (n.states[q].accepting) out.insert(w);
        if (static_cast<int>(w.size()) == maxlen) continue;
        for (const gaut::NfaTransition& t : n.transitions) {
            if (t.src != q) continue;
            std::vector<std::string> ext = w;
            ext.push_back(t.label);
            if (seen.insert({t.dst, ext}).second) queue.push_back({t.dst, std::move(ext)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Walk counting by matrix powers over the vertex adjacency multiplicities.

inline long long walk_count(const gaut::GraphAlphabet& a, int maxlen) {
    std::size_t n = a.vertex_count();
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[a.vertices()[i]] = i;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (const gaut::Edge& e : a.edges()) ++m[idx[e.src]][idx[e.dst]];
    std::vector<std::vector<long long>> power = m;
    long long total = static_cast<long long>(n);  // identities
    for (int len = 1; len <= maxlen; ++len) {
        if (len > 1) {
            std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t j = 0; j < n; ++j)
                        next[i][j] += power[i][k] * m[k][j];
            power = std::move(next);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) total += power[i][j];
    }
    return total;
}

// ---------------------------------------------------------------------------
// A fixed machine over the depth-2 starter/terminator alphabet on {a,b,c}:
// one a-event running in parallel with b followed by c.

inline gaut::Automaton interleaving_machine() {
    gaut::GraphAlphabet alpha = gaut::st_alphabet({"a", "b", "c"}, 2);
    auto v = [](const char* seq) { return std::string("⟨") + seq + "⟩"; };
    std::vector<gaut::State> states = {
        {"s00", v(""), true, false},  {"s10", v("b"), false, false},
        {"s20", v(""), false, false}, {"s30", v("c"), false, false},
        {"s40", v(""), false, true},  {"s01", v("a"), false, false},
        {"s11", v("b,a"), false, false}, {"s21", v("a"), false, false},
        {"s31", v("c,a"), false, false}, {"s41", v("a"), false, false},
        {"s02", v(""), false, false}, {"s12", v("b"), false, false},
        {"s22", v(""), false, false}, {"s32", v("c"), false, false},
        {"s42", v(""), false, false}};
    gaut::Automaton skeleton(alpha, states, {});
    auto t = [&](const char* label, const char* src, const char* dst) {
        return gaut::Transition{skeleton.state_index(src), skeleton.state_index(dst),
                                label, false};
    };
    std::vector<gaut::Transition> transitions = {
        t("S0.b@", "s00", "s10"),     t("T0@b", "s10", "s20"),
        t("S0.a@", "s00", "s01"),     t("T0@a", "s01", "s02"),
        t("S1.a@b", "s10", "s11"),    t("T1@b,a", "s11", "s12"),
        t("S0.c@", "s20", "s30"),     t("T0@c", "s30", "s40"),
        t("S0.b@a", "s01", "s11"),    t("T0@b,a", "s11", "s21"),
        t("S0.b@", "s02", "s12"),     t("T0@b", "s12", "s22"),
        t("S0.c@a", "s21", "s31"),    t("T0@c,a", "s31", "s41"),
        t("S0.c@", "s22", "s32"),     t("T0@c", "s32", "s42"),
        t("S0.a@", "s20", "s21"),     t("T0@a", "s21", "s22"),
        t("S1.a@c", "s30", "s31"),    t("T1@c,a", "s31", "s32"),
        t("S0.a@", "s40", "s41"),     t("T0@a", "s41", "s42")};
    return gaut::Automaton(alpha, states, transitions);
}

}  // namespace support

#endif
