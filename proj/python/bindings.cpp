#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "rankmatch/errors.hpp"
#include "rankmatch/suites.hpp"
#include "rankmatch/theorem.hpp"

namespace py = pybind11;
using namespace rankmatch;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;
using PyEdge = std::vector<int>;  // (i, j) or (i,), 1-based

Matrix to_matrix(const Rows& rows, std::uint32_t p) { return Matrix::from_rows(FieldSpec(p), rows); }

Rows to_rows(const Matrix& m) {
  Rows out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

LoopGraph to_graph(int n, const std::vector<PyEdge>& edges) {
  LoopGraph g(n);
  for (const auto& e : edges) {
    if (e.empty() || e.size() > 2) throw DomainError("an edge has one or two vertices");
    for (int v : e)
      if (v < 1 || v > n) throw DomainError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    g.add_edge(Edge::make(e.front() - 1, e.back() - 1));
  }
  return g;
}

std::vector<py::tuple> edge_list(const std::vector<Edge>& edges) {
  std::vector<py::tuple> out;
  for (const auto& e : edges)
    if (e.is_loop()) out.push_back(py::make_tuple(e.a + 1));
    else out.push_back(py::make_tuple(e.a + 1, e.b + 1));
  return out;
}

py::dict witness_dict(const WitnessResult& w) {
  py::dict d;
  d["found"] = w.found;
  d["point"] = w.point;
  d["matrix"] = to_rows(w.matrix);
  d["rank"] = w.achieved_rank;
  d["search_size"] = w.search_size;
  d["mu"] = w.mu;
  d["matching"] = edge_list(w.selection.matching);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rank and matching computations over GF(p)";

  // Translators run most recent first, so derived types register last.
  const auto& base_error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", base_error.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", base_error.ptr());
  py::register_exception<DomainError>(m, "DomainError", base_error.ptr());

  m.def("rank", [](const Rows& a, std::uint32_t p) { return rank(to_matrix(a, p)); }, py::arg("rows"), py::arg("p"));
  m.def("det", [](const Rows& a, std::uint32_t p) { return det(to_matrix(a, p)).value(); }, py::arg("rows"),
        py::arg("p"));
  m.def("pfaffian", [](const Rows& a, std::uint32_t p) { return pfaffian_elimination(to_matrix(a, p)).value(); },
        py::arg("rows"), py::arg("p"));
  m.def("pfaffian_combinatorial",
        [](const Rows& a, std::uint32_t p) { return pfaffian_combinatorial(to_matrix(a, p)).value(); },
        py::arg("rows"), py::arg("p"));

  m.def("nu", [](int n, const std::vector<PyEdge>& e) { return nu(to_graph(n, e)); }, py::arg("n"), py::arg("edges"));
  m.def("mu", [](int n, const std::vector<PyEdge>& e) { return mu(to_graph(n, e)); }, py::arg("n"), py::arg("edges"));
  m.def("max_matching", [](int n, const std::vector<PyEdge>& e) { return edge_list(max_matching_witness(to_graph(n, e))); },
        py::arg("n"), py::arg("edges"));
  m.def("u_a", &u_a, py::arg("n"), py::arg("k"));
  m.def("u_s", &u_s, py::arg("n"), py::arg("k"));

  py::class_<AffineSpace>(m, "Space")
      .def_static("parse", &parse_space, py::arg("text"))
      .def_static(
          "counterexample", [](int which) { return counterexample_f2(which); }, py::arg("which"))
      .def_static(
          "extremal",
          [](const std::string& kind, std::uint32_t p, int n, int k) {
            for (auto e : {ExtremalKind::u1a, ExtremalKind::u2a, ExtremalKind::u1s, ExtremalKind::u2s})
              if (to_string(e) == kind) return extremal(e, FieldSpec(p), n, k);
            throw DomainError("unknown extremal kind '" + kind + "'");
          },
          py::arg("kind"), py::arg("p"), py::arg("n"), py::arg("k"))
      .def_property_readonly("p", [](const AffineSpace& s) { return s.spec().modulus(); })
      .def_property_readonly("n", &AffineSpace::order)
      .def_property_readonly("kind", [](const AffineSpace& s) { return std::string(to_string(s.kind())); })
      .def_property_readonly("base", [](const AffineSpace& s) { return to_rows(s.base()); })
      .def_property_readonly("basis",
                             [](const AffineSpace& s) {
                               std::vector<Rows> out;
                               for (const auto& b : s.basis()) out.push_back(to_rows(b));
                               return out;
                             })
      .def("dimension", &dimension)
      .def("leading_graph", [](const AffineSpace& s) { return edge_list(leading_graph(s).edges()); })
      .def("max_rank", [](const AffineSpace& s, std::uint64_t cap) { return max_rank_oracle(s, cap); },
           py::arg("cap") = kDefaultOracleCap)
      .def("witness", [](const AffineSpace& s) {
        const bool alt = s.kind() == SpaceKind::alternating && is_alternating(s.base());
        return witness_dict(alt ? witness_search_alt(s) : witness_search_ws(s));
      })
      .def("double", &double_symmetric)
      .def("serialize", &serialize_space)
      .def("__eq__", [](const AffineSpace& a, const AffineSpace& b) { return a == b; })
      .def("__repr__", [](const AffineSpace& s) {
        return "<Space n=" + std::to_string(s.order()) + " p=" + std::to_string(s.spec().modulus()) +
               " kind=" + std::string(to_string(s.kind())) + " dim=" + std::to_string(s.basis().size()) + ">";
      });

  m.def(
      "verify_json",
      [](const std::string& suite, std::optional<int> n, std::optional<int> k, std::optional<int> p,
         std::optional<int> d, std::int64_t trials, std::uint64_t seed, std::uint64_t cap, unsigned workers) {
        if (!is_suite_id(suite)) throw DomainError("unknown suite '" + suite + "'");
        auto params = default_params(suite);
        if (n) params.n = *n;
        if (k) params.k = *k;
        if (p) params.p = *p;
        if (d) params.d = *d;
        params.trials = trials;
        params.seed = seed;
        params.cap = cap;
        params.workers = workers;
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(suite, params);
        }
        return reports.size() == 1 ? to_json(reports.front()) : to_json(reports);
      },
      py::arg("suite"), py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("p") = py::none(),
      py::arg("d") = py::none(), py::arg("trials") = 200, py::arg("seed") = 42,
      py::arg("cap") = kDefaultOracleCap, py::arg("workers") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
