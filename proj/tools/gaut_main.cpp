#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaut/minimize.hpp"
#include "gaut/ops.hpp"
#include "gaut/oracle.hpp"
#include "gaut/rational.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSemantic = 3;

gaut::Automaton load_checked(const std::string& path) {
    gaut::Automaton a = gaut::load_automaton(path);
    std::vector<std::string> violations = gaut::validate(a);
    if (!violations.empty()) {
        std::string msg = path + ": invalid automaton";
        for (const std::string& v : violations) msg += "\n  " + v;
        throw gaut::Error(msg);
    }
    return a;
}

gaut::GraphAlphabet load_alphabet_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gaut::Error("cannot read file '" + path + "'");
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return gaut::parse_alphabet(text);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gaut::Error("cannot write file '" + path + "'");
    out << text;
    if (!out.flush()) throw gaut::Error("cannot write file '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Typed automata over graph alphabets"};
    app.require_subcommand(1);

    std::string in1, in2, out, word_text, expr_text, alphabet_path, kind;
    std::vector<std::string> events;
    int maxlen = 6;
    int depth = 0;
    bool force_dc = false;
    bool keep_silent = false;

    auto* validate_cmd = app.add_subcommand("validate", "Report typing violations");
    validate_cmd->add_option("automaton", in1)->required();

    auto* member_cmd = app.add_subcommand("member", "Test word membership (exit 0/1)");
    member_cmd->add_option("automaton", in1)->required();
    member_cmd->add_option("word", word_text)->required();

    auto* enum_cmd = app.add_subcommand("enum", "List accepted words up to a length");
    enum_cmd->add_option("automaton", in1)->required();
    enum_cmd->add_option("--maxlen", maxlen)->check(CLI::Range(0, gaut::kMaxBound));

    auto* union_cmd = app.add_subcommand("union", "Union of two automata");
    union_cmd->add_option("a1", in1)->required();
    union_cmd->add_option("a2", in2)->required();
    union_cmd->add_option("-o,--output", out)->required();

    auto* concat_cmd = app.add_subcommand("concat", "Concatenation of two automata");
    concat_cmd->add_option("a1", in1)->required();
    concat_cmd->add_option("a2", in2)->required();
    concat_cmd->add_option("-o,--output", out)->required();

    auto* intersect_cmd = app.add_subcommand("intersect", "Intersection of two automata");
    intersect_cmd->add_option("a1", in1)->required();
    intersect_cmd->add_option("a2", in2)->required();
    intersect_cmd->add_option("-o,--output", out)->required();

    auto* plus_cmd = app.add_subcommand("plus", "One-or-more iteration");
    plus_cmd->add_option("automaton", in1)->required();
    plus_cmd->add_option("-o,--output", out)->required();

    auto* det_cmd = app.add_subcommand("determinize", "Subset construction");
    det_cmd->add_option("automaton", in1)->required();
    det_cmd->add_option("-o,--output", out)->required();

    auto* complete_cmd = app.add_subcommand("complete", "Add sinks until complete");
    complete_cmd->add_option("automaton", in1)->required();
    complete_cmd->add_option("-o,--output", out)->required();

    auto* complement_cmd = app.add_subcommand("complement", "Swap accepting states");
    complement_cmd->add_option("automaton", in1)->required();
    complement_cmd->add_option("-o,--output", out)->required();
    complement_cmd->add_flag("--force-dc", force_dc,
                             "Determinize and complete first if needed");

    auto* minimize_cmd = app.add_subcommand("minimize", "Canonical minimal machine");
    minimize_cmd->add_option("automaton", in1)->required();
    minimize_cmd->add_option("-o,--output", out)->required();

    auto* trim_cmd = app.add_subcommand("trim", "Drop states off accepting paths");
    trim_cmd->add_option("automaton", in1)->required();
    trim_cmd->add_option("-o,--output", out)->required();

    auto* qleft_cmd = app.add_subcommand("quotient-left", "Left quotient by a word");
    qleft_cmd->add_option("automaton", in1)->required();
    qleft_cmd->add_option("word", word_text)->required();
    qleft_cmd->add_option("-o,--output", out)->required();

    auto* qright_cmd = app.add_subcommand("quotient-right", "Right quotient by a word");
    qright_cmd->add_option("automaton", in1)->required();
    qright_cmd->add_option("word", word_text)->required();
    qright_cmd->add_option("-o,--output", out)->required();

    auto* torat_cmd = app.add_subcommand("to-rat", "Rational expression for L(A)");
    torat_cmd->add_option("automaton", in1)->required();

    auto* fromrat_cmd = app.add_subcommand("from-rat", "Compile a rational expression");
    fromrat_cmd->add_option("--alphabet", alphabet_path)->required();
    fromrat_cmd->add_option("expr", expr_text)->required();
    fromrat_cmd->add_option("-o,--output", out)->required();
    fromrat_cmd->add_flag("--keep-silent", keep_silent,
                          "Keep the silent wiring (debugging aid)");

    auto* equiv_cmd = app.add_subcommand("equiv", "Bounded language equality (exit 0/1)");
    equiv_cmd->add_option("a1", in1)->required();
    equiv_cmd->add_option("a2", in2)->required();
    equiv_cmd->add_option("--maxlen", maxlen)->check(CLI::Range(0, gaut::kMaxBound));

    auto* quotients_cmd = app.add_subcommand("quotients", "Count distinct left quotients");
    quotients_cmd->add_option("automaton", in1)->required();

    auto* morphism_cmd = app.add_subcommand("morphism", "Structure-preserving state map");
    morphism_cmd->add_option("a1", in1)->required();
    morphism_cmd->add_option("a2", in2)->required();

    auto* untyped_cmd = app.add_subcommand("untyped", "Erase types to a plain NFA");
    untyped_cmd->add_option("automaton", in1)->required();
    untyped_cmd->add_option("-o,--output", out)->required();

    auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
    dot_cmd->add_option("automaton", in1)->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a built-in alphabet");
    gen_cmd->add_option("kind", kind, "lock, types or st")->required();
    gen_cmd->add_option("--events", events)->delimiter(',');
    gen_cmd->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("-o,--output", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*validate_cmd) {
            gaut::Automaton a = gaut::load_automaton(in1);
            std::vector<std::string> violations = gaut::validate(a);
            for (const std::string& v : violations) std::cout << v << "\n";
            return violations.empty() ? 0 : 1;
        }
        if (*member_cmd) {
            gaut::Automaton a = load_checked(in1);
            return gaut::accepts(a, gaut::parse_word(word_text)) ? 0 : 1;
        }
        if (*enum_cmd) {
            gaut::LanguageSet lang = gaut::bounded_language(load_checked(in1), maxlen);
            for (const gaut::Morphism& m : lang.elements())
                std::cout << gaut::format_word(m) << "\n";
            return 0;
        }
        if (*union_cmd) {
            write_file(out, gaut::serialize_automaton(
                                gaut::unite(load_checked(in1), load_checked(in2))));
            return 0;
        }
        if (*concat_cmd) {
            write_file(out, gaut::serialize_automaton(
                                gaut::concat(load_checked(in1), load_checked(in2))));
            return 0;
        }
        if (*intersect_cmd) {
            write_file(out, gaut::serialize_automaton(
                                gaut::intersect(load_checked(in1), load_checked(in2))));
            return 0;
        }
        if (*plus_cmd) {
            write_file(out, gaut::serialize_automaton(gaut::plus(load_checked(in1))));
            return 0;
        }
        if (*det_cmd) {
            write_file(out, gaut::serialize_automaton(gaut::determinize(load_checked(in1))));
            return 0;
        }
        if (*complete_cmd) {
            write_file(out, gaut::serialize_automaton(gaut::complete(load_checked(in1))));
            return 0;
        }
        if (*complement_cmd) {
            gaut::Automaton a = load_checked(in1);
            if (force_dc) a = gaut::complete(gaut::determinize(a));
            write_file(out, gaut::serialize_automaton(gaut::complement(a)));
            return 0;
        }
        if (*minimize_cmd) {
            write_file(out, gaut::serialize_automaton(gaut::minimize(load_checked(in1))));
            return 0;
        }
        if (*trim_cmd) {
            write_file(out, gaut::serialize_automaton(gaut::trim(load_checked(in1))));
            return 0;
        }
        if (*qleft_cmd) {
            write_file(out, gaut::serialize_automaton(gaut::quotient_left(
                                load_checked(in1), gaut::parse_word(word_text))));
            return 0;
        }
        if (*qright_cmd) {
            write_file(out, gaut::serialize_automaton(gaut::quotient_right(
                                load_checked(in1), gaut::parse_word(word_text))));
            return 0;
        }
        if (*torat_cmd) {
            std::cout << gaut::print_expr(gaut::to_rational(load_checked(in1))) << "\n";
            return 0;
        }
        if (*fromrat_cmd) {
            gaut::GraphAlphabet alpha = load_alphabet_file(alphabet_path);
            gaut::RatExpr e = gaut::parse_expr(alpha, expr_text);
            gaut::Automaton a = keep_silent ? gaut::compile_keep_silent(alpha, e)
                                            : gaut::compile(alpha, e);
            write_file(out, gaut::serialize_automaton(a));
            return 0;
        }
        if (*equiv_cmd) {
            gaut::EqualityReport report = gaut::bounded_equal(
                gaut::bounded_language(load_checked(in1), maxlen),
                gaut::bounded_language(load_checked(in2), maxlen));
            if (report.equal) return 0;
            for (const gaut::Morphism& m : report.only_left)
                std::cout << "only-left: " << gaut::format_word(m) << "\n";
            for (const gaut::Morphism& m : report.only_right)
                std::cout << "only-right: " << gaut::format_word(m) << "\n";
            return 1;
        }
        if (*quotients_cmd) {
            gaut::SuffixQuotients q = gaut::suffix_quotients(load_checked(in1));
            std::cout << q.count << "\n";
            for (const gaut::Morphism& m : q.witnesses)
                std::cout << gaut::format_word(m) << "\n";
            return 0;
        }
        if (*morphism_cmd) {
            gaut::AutMorphism m = gaut::find_morphism(load_checked(in1), load_checked(in2));
            for (const auto& [from, to] : m.mapping)
                std::cout << "map " << from << " -> " << to << "\n";
            return 0;
        }
        if (*untyped_cmd) {
            write_file(out, gaut::serialize_nfa(gaut::untyped(load_checked(in1))));
            return 0;
        }
        if (*dot_cmd) {
            std::cout << gaut::to_dot(load_checked(in1));
            return 0;
        }
        if (*gen_cmd) {
            gaut::GraphAlphabet alpha;
            if (kind == "st") {
                if (events.empty())
                    throw gaut::Error("gen st requires --events");
                alpha = gaut::st_alphabet(events, depth);
            } else {
                alpha = gaut::builtin_alphabet(kind);
            }
            write_file(out, gaut::serialize_alphabet(alpha));
            return 0;
        }
    } catch (const gaut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitUsage;
}
