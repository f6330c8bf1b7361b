#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaut/minimize.hpp"
#include "gaut/ops.hpp"
#include "gaut/oracle.hpp"
#include "gaut/rational.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_gaut, m) {
    m.doc() = "Typed automata over graph alphabets";

    auto error = py::register_exception<gaut::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<gaut::ParseError>(m, "ParseError", error);
    py::register_exception<gaut::PreconditionError>(m, "PreconditionError", error);

    py::class_<gaut::Edge>(m, "Edge")
        .def(py::init<std::string, std::string, std::string>(), py::arg("name"),
             py::arg("src"), py::arg("dst"))
        .def_readonly("name", &gaut::Edge::name)
        .def_readonly("src", &gaut::Edge::src)
        .def_readonly("dst", &gaut::Edge::dst)
        .def("__eq__", [](const gaut::Edge& a, const gaut::Edge& b) { return a == b; })
        .def("__repr__", [](const gaut::Edge& e) {
            return "Edge(" + e.name + ": " + e.src + " -> " + e.dst + ")";
        });

    py::class_<gaut::GraphAlphabet>(m, "GraphAlphabet")
        .def(py::init<>())
        .def(py::init<std::vector<std::string>, std::vector<gaut::Edge>>(),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertices", &gaut::GraphAlphabet::vertices)
        .def_property_readonly("edges", &gaut::GraphAlphabet::edges)
        .def("has_vertex", &gaut::GraphAlphabet::has_vertex)
        .def("has_edge", &gaut::GraphAlphabet::has_edge)
        .def("edge", &gaut::GraphAlphabet::edge, py::return_value_policy::copy)
        .def("__eq__", [](const gaut::GraphAlphabet& a, const gaut::GraphAlphabet& b) {
            return a == b;
        });

    py::class_<gaut::Morphism>(m, "Morphism")
        .def(py::init<std::string, std::vector<std::string>, std::string>(),
             py::arg("source"), py::arg("word"), py::arg("target"))
        .def_readonly("source", &gaut::Morphism::source)
        .def_readonly("word", &gaut::Morphism::word)
        .def_readonly("target", &gaut::Morphism::target)
        .def("is_identity", &gaut::Morphism::is_identity)
        .def("__len__", &gaut::Morphism::length)
        .def("__eq__", [](const gaut::Morphism& a, const gaut::Morphism& b) { return a == b; })
        .def("__lt__", [](const gaut::Morphism& a, const gaut::Morphism& b) { return a < b; })
        .def("__hash__", [](const gaut::Morphism& m) {
            return py::hash(py::str(gaut::format_word(m)));
        })
        .def("__repr__", [](const gaut::Morphism& m) { return gaut::format_word(m); });

    py::class_<gaut::State>(m, "State")
        .def(py::init([](std::string name, std::string vertex, bool initial, bool accepting) {
                 return gaut::State{std::move(name), std::move(vertex), initial, accepting};
             }),
             py::arg("name"), py::arg("vertex"), py::arg("initial") = false,
             py::arg("accepting") = false)
        .def_readonly("name", &gaut::State::name)
        .def_readonly("vertex", &gaut::State::vertex)
        .def_readonly("initial", &gaut::State::initial)
        .def_readonly("accepting", &gaut::State::accepting);

    py::class_<gaut::Transition>(m, "Transition")
        .def(py::init([](int src, int dst, std::string label, bool silent) {
                 return gaut::Transition{src, dst, std::move(label), silent};
             }),
             py::arg("src"), py::arg("dst"), py::arg("label"), py::arg("silent") = false)
        .def_readonly("src", &gaut::Transition::src)
        .def_readonly("dst", &gaut::Transition::dst)
        .def_readonly("label", &gaut::Transition::label)
        .def_readonly("silent", &gaut::Transition::silent);

    py::class_<gaut::Automaton>(m, "Automaton")
        .def(py::init<gaut::GraphAlphabet>(), py::arg("alphabet"))
        .def(py::init<gaut::GraphAlphabet, std::vector<gaut::State>,
                      std::vector<gaut::Transition>>(),
             py::arg("alphabet"), py::arg("states"), py::arg("transitions"))
        .def_property_readonly("alphabet", &gaut::Automaton::alphabet)
        .def_property_readonly("states", &gaut::Automaton::states)
        .def_property_readonly("transitions", &gaut::Automaton::transitions)
        .def("state_index", &gaut::Automaton::state_index)
        .def("has_silent", &gaut::Automaton::has_silent)
        .def("__len__", &gaut::Automaton::state_count)
        .def("__eq__", [](const gaut::Automaton& a, const gaut::Automaton& b) {
            return a == b;
        });

    py::class_<gaut::NfaState>(m, "NfaState")
        .def_readonly("name", &gaut::NfaState::name)
        .def_readonly("initial", &gaut::NfaState::initial)
        .def_readonly("accepting", &gaut::NfaState::accepting);

    py::class_<gaut::NfaTransition>(m, "NfaTransition")
        .def_readonly("src", &gaut::NfaTransition::src)
        .def_readonly("dst", &gaut::NfaTransition::dst)
        .def_readonly("label", &gaut::NfaTransition::label);

    py::class_<gaut::UntypedNfa>(m, "UntypedNfa")
        .def_readonly("states", &gaut::UntypedNfa::states)
        .def_readonly("transitions", &gaut::UntypedNfa::transitions);

    py::class_<gaut::Endpoints>(m, "Endpoints")
        .def_readonly("sources", &gaut::Endpoints::sources)
        .def_readonly("targets", &gaut::Endpoints::targets);

    py::class_<gaut::RatExpr> ratexpr(m, "RatExpr");
    py::enum_<gaut::RatExpr::Kind>(ratexpr, "Kind")
        .value("Empty", gaut::RatExpr::Kind::Empty)
        .value("Atom", gaut::RatExpr::Kind::Atom)
        .value("Id", gaut::RatExpr::Kind::Id)
        .value("Union", gaut::RatExpr::Kind::Union)
        .value("Concat", gaut::RatExpr::Kind::Concat)
        .value("Plus", gaut::RatExpr::Kind::Plus);
    ratexpr.def_static("empty", &gaut::RatExpr::empty)
        .def_static("atom", &gaut::RatExpr::atom)
        .def_static("id", &gaut::RatExpr::id)
        .def_static("alt", &gaut::RatExpr::alt)
        .def_static("seq", &gaut::RatExpr::seq)
        .def_static("plus", &gaut::RatExpr::plus)
        .def_property_readonly("kind", &gaut::RatExpr::kind)
        .def_property_readonly("symbol", &gaut::RatExpr::symbol)
        .def("__eq__", [](const gaut::RatExpr& a, const gaut::RatExpr& b) { return a == b; })
        .def("__str__", [](const gaut::RatExpr& e) { return gaut::print_expr(e); })
        .def("__repr__", [](const gaut::RatExpr& e) { return gaut::print_expr(e); });

    py::class_<gaut::LanguageSet>(m, "LanguageSet")
        .def_property_readonly("alphabet", &gaut::LanguageSet::alphabet)
        .def_property_readonly("bound", &gaut::LanguageSet::bound)
        .def_property_readonly("elements",
                               [](const gaut::LanguageSet& s) {
                                   return std::vector<gaut::Morphism>(
                                       s.elements().begin(), s.elements().end());
                               })
        .def("contains", &gaut::LanguageSet::contains)
        .def("__contains__", &gaut::LanguageSet::contains)
        .def("__len__", &gaut::LanguageSet::size);

    py::class_<gaut::EqualityReport>(m, "EqualityReport")
        .def_readonly("equal", &gaut::EqualityReport::equal)
        .def_readonly("only_left", &gaut::EqualityReport::only_left)
        .def_readonly("only_right", &gaut::EqualityReport::only_right)
        .def("__bool__", [](const gaut::EqualityReport& r) { return r.equal; });

    py::class_<gaut::NerodePartition>(m, "NerodePartition")
        .def_readonly("blocks", &gaut::NerodePartition::blocks)
        .def_readonly("block_of", &gaut::NerodePartition::block_of);

    py::class_<gaut::SuffixQuotients>(m, "SuffixQuotients")
        .def_readonly("count", &gaut::SuffixQuotients::count)
        .def_readonly("witnesses", &gaut::SuffixQuotients::witnesses);

    py::class_<gaut::AutMorphism>(m, "AutMorphism")
        .def_readonly("mapping", &gaut::AutMorphism::mapping);

    // Alphabets and words.
    m.def("parse_alphabet", [](const std::string& t) { return gaut::parse_alphabet(t); });
    m.def("serialize_alphabet", &gaut::serialize_alphabet);
    m.def("builtin_alphabet", &gaut::builtin_alphabet);
    m.def("st_alphabet", &gaut::st_alphabet, py::arg("events"), py::arg("depth"));
    m.def("identity", &gaut::identity);
    m.def("compose", &gaut::compose);
    m.def("well_formed", &gaut::well_formed);
    m.def("parse_word", [](const std::string& t) { return gaut::parse_word(t); });
    m.def("format_word", &gaut::format_word);

    // Automata.
    m.def("parse_automaton",
          [](const std::string& t, const std::string& base_dir) {
              return gaut::parse_automaton(t, base_dir);
          },
          py::arg("text"), py::arg("base_dir") = "");
    m.def("load_automaton", &gaut::load_automaton);
    m.def("serialize_automaton", &gaut::serialize_automaton);
    m.def("parse_nfa", [](const std::string& t) { return gaut::parse_nfa(t); });
    m.def("serialize_nfa", &gaut::serialize_nfa);
    m.def("validate", &gaut::validate);
    m.def("accepts", &gaut::accepts);
    m.def("is_deterministic", &gaut::is_deterministic);
    m.def("is_complete", &gaut::is_complete);
    m.def("trim", &gaut::trim);
    m.def("universal", &gaut::universal);
    m.def("endpoints", &gaut::endpoints);
    m.def("untyped", &gaut::untyped);
    m.def("to_dot", &gaut::to_dot);

    // Rational expressions.
    m.def("parse_expr",
          [](const gaut::GraphAlphabet& a, const std::string& t) {
              return gaut::parse_expr(a, t);
          });
    m.def("print_expr", &gaut::print_expr);
    m.def("compile", &gaut::compile);
    m.def("eliminate_silent", &gaut::eliminate_silent);
    m.def("to_rational", &gaut::to_rational);

    // Closure operations.
    m.def("unite", &gaut::unite);
    m.def("concat", &gaut::concat);
    m.def("plus", &gaut::plus);
    m.def("intersect", &gaut::intersect);
    m.def("determinize", &gaut::determinize);
    m.def("complete", &gaut::complete);
    m.def("complement", &gaut::complement);
    m.def("quotient_left", &gaut::quotient_left);
    m.def("quotient_right", &gaut::quotient_right);

    // Minimization.
    m.def("nerode_partition", &gaut::nerode_partition);
    m.def("minimize", &gaut::minimize);
    m.def("suffix_quotients", &gaut::suffix_quotients);
    m.def("find_morphism", &gaut::find_morphism);
    m.def("check_minimal", &gaut::check_minimal);

    // Bounded enumeration.
    m.def("enum_morphisms", &gaut::enum_morphisms);
    m.def("bounded_language", &gaut::bounded_language);
    m.def("bounded_rat", &gaut::bounded_rat);
    m.def("bounded_equal", &gaut::bounded_equal);
}
