#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "freegroup/error.hpp"
#include "freegroup/group.hpp"
#include "freegroup/moves.hpp"
#include "freegroup/oracle.hpp"
#include "freegroup/reduction.hpp"
#include "freegroup/text.hpp"
#include "freegroup/transform.hpp"

namespace py = pybind11;

namespace {

// Words cross the boundary as text: "a a' b".
std::string nf_text(const std::string& w) { return fg::to_string(fg::normal_form(fg::parse_word(w)).word()); }

fg::Direction direction_of(const std::string& d) {
  if (d == "left" || d == "l") return fg::Direction::left;
  if (d == "right" || d == "r") return fg::Direction::right;
  throw py::value_error("direction must be 'left' or 'right'");
}

std::vector<std::string> chain_texts(const fg::MoveChain& chain) {
  std::vector<std::string> out;
  for (const auto& m : chain) out.push_back(fg::to_string(m));
  return out;
}

fg::MoveChain chain_of(const std::vector<std::string>& moves) {
  fg::MoveChain chain;
  for (const auto& m : moves) chain.push_back(fg::parse_move(m));
  return chain;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reduction sequences, moves and normal forms in free groups";

  auto error = py::register_exception<fg::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<fg::ParseError>(m, "ParseError", error);
  py::register_exception<fg::InvalidRedex>(m, "InvalidRedex", error);
  py::register_exception<fg::IncompleteReduction>(m, "IncompleteReduction", error);
  py::register_exception<fg::WordMismatch>(m, "WordMismatch", error);
  py::register_exception<fg::CapExceeded>(m, "CapExceeded", error);
  auto move_error = py::register_exception<fg::MoveError>(m, "MoveError", error);
  py::register_exception<fg::NotIndependent>(m, "NotIndependent", move_error);
  py::register_exception<fg::NoOverlap>(m, "NoOverlap", move_error);
  py::register_exception<fg::IndexOutOfRange>(m, "IndexOutOfRange", move_error);

  // group
  m.def("parse_word", [](const std::string& w) { return fg::to_string(fg::parse_word(w)); },
        "Canonical text of a word (raises ParseError)");
  m.def("normal_form", &nf_text);
  m.def("mul", [](const std::string& u, const std::string& v) {
    return fg::to_string(
        fg::mul(fg::normal_form(fg::parse_word(u)), fg::normal_form(fg::parse_word(v))).word());
  });
  m.def("inv", [](const std::string& u) {
    return fg::to_string(fg::inv(fg::normal_form(fg::parse_word(u))).word());
  });
  m.def("eq", [](const std::string& u, const std::string& v) {
    return fg::eq(fg::parse_word(u), fg::parse_word(v));
  });
  m.def("abelianize", [](const std::string& w) {
    std::map<std::string, std::int64_t> out;
    for (const auto& [g, n] : fg::abelianize(fg::parse_word(w))) out[g.name()] = n;
    return out;
  });
  m.def("find_redexes", [](const std::string& w) { return fg::find_redexes(fg::parse_word(w)); });
  m.def("apply_step", [](const std::string& w, std::size_t p) {
    return fg::to_string(fg::apply_step(fg::parse_word(w), p));
  });

  // reduction
  py::class_<fg::ReductionSequence>(m, "ReductionSequence")
      .def_property_readonly("word", [](const fg::ReductionSequence& r) { return fg::to_string(r.word()); })
      .def_property_readonly("steps", &fg::ReductionSequence::steps)
      .def("run", [](const fg::ReductionSequence& r) {
        std::vector<std::string> out;
        for (const auto& w : fg::run_sequence(r)) out.push_back(fg::to_string(w));
        return out;
      })
      .def("step_of_index", [](const fg::ReductionSequence& r, std::size_t i) {
        if (i >= r.word().size()) throw py::index_error("index outside the word");
        return fg::step_of_index(r, i);
      })
      .def("__len__", &fg::ReductionSequence::size)
      .def("__eq__", [](const fg::ReductionSequence& a, const fg::ReductionSequence& b) { return a == b; })
      .def("__repr__", [](const fg::ReductionSequence& r) {
        return "ReductionSequence('" + fg::to_string(r.word()) + "', [" + fg::format_positions(r.steps()) + "])";
      });

  m.def("validate_sequence", [](const std::string& w, const std::vector<std::size_t>& steps) {
    return fg::validate_sequence(fg::parse_word(w), steps);
  });

  // moves
  m.def("swap", &fg::swap, py::arg("r"), py::arg("i"));
  m.def("overlap_switch", [](const fg::ReductionSequence& r, std::size_t i, const std::string& d) {
    return fg::overlap_switch(r, i, direction_of(d));
  });
  m.def("apply_chain", [](const fg::ReductionSequence& r, const std::vector<std::string>& moves) {
    return fg::apply_chain(r, chain_of(moves));
  });

  // transform
  m.def("front_reduction", [](const fg::ReductionSequence& r, std::size_t p) {
    auto front = fg::front_reduction(r, p);
    return py::make_tuple(chain_texts(front.chain), front.sequence);
  });
  m.def("transform_to", [](const fg::ReductionSequence& r, const fg::ReductionSequence& s) {
    return chain_texts(fg::transform_to(r, s));
  });
  m.def("extend_reduction", [](const std::string& y, const std::string& a, const std::string& z,
                               const fg::ReductionSequence& r) {
    fg::Word letter = fg::parse_word(a);
    if (letter.size() != 1) throw py::value_error("a must be a single signed generator");
    return fg::extend_reduction(fg::parse_word(y), letter[0], fg::parse_word(z), r);
  });
  m.def("drop_redex", &fg::drop_redex);

  // oracle
  m.def("enumerate_sequences", [](const std::string& w, std::size_t cap) {
    return fg::enumerate_sequences(fg::parse_word(w), {cap});
  }, py::arg("word"), py::arg("cap") = fg::OracleConfig{}.max_length);
  m.def("move_graph", [](const std::string& w, std::size_t cap) {
    auto g = fg::build_move_graph(fg::parse_word(w), {cap});
    py::list edges;
    for (const auto& e : g.edges()) edges.append(py::make_tuple(e.from, e.to, fg::to_string(e.move)));
    py::dict out;
    out["nodes"] = g.nodes();
    out["edges"] = edges;
    out["connected"] = fg::check_connected(g);
    return out;
  }, py::arg("word"), py::arg("cap") = fg::OracleConfig{}.max_length);
  m.def("to_dot", [](const std::string& w, std::size_t cap) {
    return fg::to_dot(fg::build_move_graph(fg::parse_word(w), {cap}));
  }, py::arg("word"), py::arg("cap") = fg::OracleConfig{}.max_length);
  m.def("check_triviality_witness", [](const std::string& w, std::size_t cap) {
    return fg::check_triviality_witness(fg::parse_word(w), {cap});
  }, py::arg("word"), py::arg("cap") = fg::OracleConfig{}.max_length);
}
