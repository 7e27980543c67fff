#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lgs/algebra.hpp"
#include "lgs/error.hpp"
#include "lgs/oracle/oracle.hpp"
#include "lgs/report.hpp"
#include "lgs/verdict.hpp"

namespace py = pybind11;
using namespace lgs;

namespace {

Limits make_limits(std::size_t cap_states, std::size_t cap_family) {
  Limits l;
  l.max_states = cap_states;
  l.max_family = cap_family;
  return l;
}

std::vector<std::string> names_of(const LabelledGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](VertexId v) { out.push_back(g.vertex_name(v)); });
  return out;
}

// An algebra session that owns its graph.
class Session {
 public:
  Session(LabelledGraph g, bool bar) : g_(std::make_unique<LabelledGraph>(std::move(g))) {
    alg_ = std::make_unique<Algebra>(bar ? Algebra::bar(*g_) : Algebra::smallest(*g_));
  }
  LinComb s(const std::string& w) const { return alg_->s(parse_word(*g_, w)); }
  LinComb s_star(const std::string& w) const { return alg_->s_star(parse_word(*g_, w)); }
  LinComb p(const std::vector<std::string>& names) const { return alg_->p(make_set(*g_, names)); }
  LinComb multiply(const LinComb& x, const LinComb& y) const { return alg_->multiply(x, y); }
  LinComb expand(const std::vector<std::string>& names, std::size_t n) const {
    return alg_->expand(make_set(*g_, names), n);
  }
  bool equivalent(const LinComb& x, const LinComb& y) const { return alg_->equivalent(x, y); }
  std::string format(const LinComb& x) const { return format_lincomb(*g_, x); }

 private:
  std::unique_ptr<LabelledGraph> g_;
  std::unique_ptr<Algebra> alg_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analyzer for finite labelled graphs";

  py::register_exception<Error>(m, "LgsError", PyExc_RuntimeError);

  py::class_<LabelledGraph>(m, "Graph")
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_property_readonly("vertices",
                             [](const LabelledGraph& g) {
                               std::vector<std::string> out;
                               for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(g.vertex_name(v));
                               return out;
                             })
      .def_property_readonly("labels",
                             [](const LabelledGraph& g) {
                               std::vector<std::string> out;
                               for (LabelId a = 0; a < g.label_count(); ++a) out.push_back(g.label_name(a));
                               return out;
                             })
      .def("serialize", &serialize)
      .def(
          "relative_range",
          [](const LabelledGraph& g, const std::vector<std::string>& from, const std::string& word) {
            return names_of(g, relative_range(g, make_set(g, from), parse_word(g, word)));
          },
          py::arg("vertices"), py::arg("word"));

  m.def(
      "analyze_json",
      [](const LabelledGraph& g, std::size_t cap_states, std::size_t cap_family) {
        return analysis_json(g, simplicity_verdict(g, make_limits(cap_states, cap_family))).dump();
      },
      py::arg("graph"), py::arg("cap_states") = Limits{}.max_states, py::arg("cap_family") = Limits{}.max_family);

  m.def(
      "check_json",
      [](const LabelledGraph& g, const std::string& property) {
        const auto p = parse_property(property);
        if (!p) throw Error("unknown property '" + property + "'");
        return check_json(g, *p).dump();
      },
      py::arg("graph"), py::arg("property"));

  m.def(
      "replay",
      [](const LabelledGraph& g, const std::string& witness) {
        const auto out = replay_witness(g, Json::parse(witness));
        return py::make_tuple(out.verified, out.message);
      },
      py::arg("graph"), py::arg("witness_json"));

  m.def(
      "oracle",
      [](std::uint64_t seed, std::size_t cases, std::size_t max_vertices) {
        oracle::SuiteConfig config;
        config.seed = seed;
        config.cases = cases;
        config.max_vertices = max_vertices;
        const auto result = oracle::run_suite(config);
        py::dict tallies;
        for (const auto& [name, t] : result.tallies)
          tallies[py::str(name)] = py::dict(py::arg("match") = t.match, py::arg("mismatch") = t.mismatch,
                                            py::arg("inconclusive") = t.inconclusive);
        return tallies;
      },
      py::arg("seed") = 1, py::arg("cases") = 200, py::arg("max_vertices") = 6);

  py::class_<LinComb>(m, "LinComb")
      .def("__add__", [](const LinComb& x, const LinComb& y) { return x + y; })
      .def("__sub__", [](const LinComb& x, const LinComb& y) { return x - y; })
      .def("__eq__", [](const LinComb& x, const LinComb& y) { return x == y; })
      .def("is_zero", &LinComb::is_zero);

  py::class_<Session>(m, "Algebra")
      .def(py::init<LabelledGraph, bool>(), py::arg("graph"), py::arg("bar") = false)
      .def("s", &Session::s)
      .def("s_star", &Session::s_star)
      .def("p", &Session::p)
      .def("multiply", &Session::multiply)
      .def("expand", &Session::expand)
      .def("equivalent", &Session::equivalent)
      .def("format", &Session::format);
}
