#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zetaeq/charpoly.hpp"
#include "zetaeq/figures.hpp"
#include "zetaeq/identities.hpp"
#include "zetaeq/invasion.hpp"
#include "zetaeq/io.hpp"
#include "zetaeq/search.hpp"
#include "zetaeq/switching.hpp"
#include "zetaeq/zeta.hpp"

namespace py = pybind11;
using namespace zetaeq;

namespace {

// Rationals cross the boundary as fractions.Fraction.
Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::int_>(value)) return Rational(py::str(value).cast<std::string>());
  if (py::isinstance<py::str>(value)) {
    Rational r(value.cast<std::string>());
    r.canonicalize();
    return r;
  }
  const py::object frac = py::module_::import("fractions").attr("Fraction")(value);
  Rational r(py::str(frac.attr("numerator")).cast<std::string>() + "/" +
             py::str(frac.attr("denominator")).cast<std::string>());
  r.canonicalize();
  return r;
}

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.get_num().get_str() + "/" + r.get_den().get_str());
}

Var var_or_throw(const std::string& name) {
  const auto v = var_from_name(name);
  if (!v) throw py::value_error("unknown variable '" + name + "'");
  return *v;
}

Point to_point(const py::dict& values) {
  Point p;
  for (const auto& [k, v] : values) p[var_or_throw(k.cast<std::string>())] = to_rational(v);
  return p;
}

ZetaSpecialization spec_from(const std::string& s) {
  if (s == "full") return ZetaSpecialization::full;
  if (s == "reversing") return ZetaSpecialization::reversing;
  if (s == "outgoing") return ZetaSpecialization::outgoing;
  if (s == "ihara") return ZetaSpecialization::ihara;
  throw py::value_error("spec must be full, reversing, outgoing or ihara");
}

SearchMode mode_from(const std::string& s) {
  if (s == "digraph") return SearchMode::digraph;
  if (s == "graph") return SearchMode::graph;
  throw py::value_error("mode must be digraph or graph");
}

WeightedDigraph weighted_from(const std::vector<std::vector<py::object>>& rows) {
  RationalMatrix w(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw py::value_error("weight matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) w(i, j) = to_rational(rows[i][j]);
  }
  return WeightedDigraph(w);
}

std::vector<std::vector<long>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntMatrix matrix_of(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw py::value_error("adjacency matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized characteristic polynomials, digraph zeta functions and zeta-equivalence";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<MultiPoly>(m, "Poly")
      .def("__str__", &MultiPoly::to_string)
      .def("__repr__", [](const MultiPoly& p) { return "Poly('" + p.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__hash__", [](const MultiPoly& p) { return py::hash(py::str(p.to_string())); })
      .def("is_zero", &MultiPoly::is_zero)
      .def("degree", [](const MultiPoly& p, const std::string& v) { return p.degree(var_or_throw(v)); })
      .def("evaluate", [](const MultiPoly& p, const py::dict& values) { return to_fraction(p.eval(to_point(values))); },
           "Exact value at a point given as {variable name: number}; every variable in use must be assigned.")
      .def("specialize", [](const MultiPoly& p, const py::dict& values) { return p.specialize(to_point(values)); })
      .def_static("var", [](const std::string& v) { return MultiPoly::var(var_or_throw(v)); });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](const std::vector<std::vector<long>>& rows) { return Digraph(matrix_of(rows)); }),
           py::arg("adjacency"))
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
            Digraph g(n);
            for (const auto& [a, b] : edges) {
              if (a >= n || b >= n) throw py::index_error("edge endpoint out of range");
              g.add_edge(a, b);
            }
            return g;
          },
          py::arg("n"), py::arg("edges"), "0-based (tail, head) pairs; repeated pairs become parallel edges.")
      .def("add_edge", &Digraph::add_edge, py::arg("tail"), py::arg("head"), py::arg("count") = 1)
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("edge_count", &Digraph::edge_count)
      .def("multiplicity", &Digraph::multiplicity)
      .def("adjacency", [](const Digraph& g) { return rows_of(g.adjacency()); })
      .def("out_degrees", &Digraph::out_degrees)
      .def("in_degrees", &Digraph::in_degrees)
      .def("is_graph", &Digraph::is_graph)
      .def("is_simple", &Digraph::is_simple)
      .def("is_weakly_connected", &Digraph::is_weakly_connected)
      .def("transpose", &Digraph::transpose)
      .def("complement", [](const Digraph& g) { return complement(g); })
      .def(
          "canonical_form", [](const Digraph& g, std::size_t max_order) { return canonical_form(g, max_order); },
          py::arg("max_order") = kDefaultCanonicalBound)
      .def(
          "is_isomorphic",
          [](const Digraph& g, const Digraph& h, std::size_t max_order) { return is_isomorphic(g, h, max_order); },
          py::arg("other"), py::arg("max_order") = 10, "Exhaustive over refined orderings; cost grows factorially.")
      .def("to_edge_list", [](const Digraph& g) { return format_edge_list(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Digraph& g) {
        std::ostringstream os;
        os << "Digraph(order=" << g.order() << ", edges=" << g.edge_count() << ")";
        return os.str();
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text).graph; });
  m.def("read_edge_list", [](const std::string& path) { return read_edge_list(path).graph; });

  m.def("eta", [](const Digraph& g) { return eta(g).poly; }, "det(x I + tu Dout + td Din + uu A + ud A^T)");
  m.def("eta_bar", [](const Digraph& g) { return eta_bar(g).poly; }, "det(x I + tu D + uu A) of a graph");
  m.def("eta_complete", &eta_complete, "eta with the y J term");
  m.def("markov_poly", &markov_poly);
  m.def("markov_f", &markov_f);
  m.def("degree_sequence", [](const Digraph& g) { return degree_sequence_from_eta_bar(eta_bar(g)); },
        "Degree sequence recovered from eta_bar, non-increasing.");
  m.def(
      "zeta_equivalent",
      [](const Digraph& g, const Digraph& h, const std::string& mode) {
        return mode_from(mode) == SearchMode::digraph ? zeta_equivalent_digraphs(g, h) : zeta_equivalent_graphs(g, h);
      },
      py::arg("g"), py::arg("h"), py::arg("mode") = "digraph");

  m.def(
      "zeta_inverse", [](const Digraph& g, const std::string& spec) { return zeta_inverse(g, spec_from(spec)); },
      py::arg("g"), py::arg("spec") = "full");
  m.def(
      "zeta_inverse_weighted",
      [](const std::vector<std::vector<py::object>>& w, const std::string& spec) {
        return zeta_inverse(weighted_from(w), spec_from(spec));
      },
      py::arg("weights"), py::arg("spec") = "full", "Weight matrix entries are numbers or 'p/q' strings; 0 means no edge.");
  m.def(
      "zeta_closed_form",
      [](const std::vector<std::vector<py::object>>& w, const std::string& spec) {
        const WeightedDigraph g = weighted_from(w);
        if (spec == "reversing") return zeta_closed_form_reversing(g);
        if (spec == "outgoing") return zeta_closed_form_outgoing(g);
        throw py::value_error("closed forms exist for reversing and outgoing");
      },
      py::arg("weights"), py::arg("spec"));
  m.def("ihara_determinant", &ihara_determinant);

  py::class_<Invader>(m, "Invader")
      .def(py::init<Digraph, std::size_t, std::size_t>(), py::arg("graph"), py::arg("tail"), py::arg("head"))
      .def_property_readonly("graph", &Invader::graph)
      .def("is_symmetric", [](const Invader& s) { return is_symmetric(s); });
  m.def("directed_path_invader", &directed_path_invader);
  m.def("undirected_path_invader", &undirected_path_invader);
  m.def("invade", &invade);
  m.def("symmetric_invade", &symmetric_invade);
  m.def("invasion_char_poly", &invasion_char_poly);
  m.def("symmetric_invasion_char_poly", &symmetric_invasion_char_poly);
  m.def("char_poly", [](const Digraph& g) { return characteristic_polynomial(g.adjacency()); });

  m.def(
      "switch",
      [](const Digraph& g, const std::string& partition) {
        const SwitchingPartition p = parse_partition(partition);
        const ValidationReport r = validate_partition(g, p);
        if (!r.valid()) throw py::value_error(r.summary());
        const Digraph out = perform_switching(g, p);
        const Certificate c = certify(g, out, build_conjugators(g, p));
        return py::make_tuple(out, c.passed());
      },
      py::arg("g"), py::arg("partition"),
      "Switch g relative to a partition in the text format; returns (switched, certificate passed).");
  m.def("validate_partition", [](const Digraph& g, const std::string& partition) {
    const ValidationReport r = validate_partition(g, parse_partition(partition));
    std::vector<std::pair<std::string, std::string>> issues;
    for (const auto& i : r.issues) issues.emplace_back(i.condition, i.detail);
    return issues;
  });

  m.def(
      "search",
      [](std::size_t n, const std::string& mode, bool connected, std::uint64_t seed, unsigned workers) {
        SearchConfig c{n, mode_from(mode), connected ? Connectivity::weak : Connectivity::none, seed, workers};
        EquivalenceClassReport r;
        {
          py::gil_scoped_release release;
          r = mine_pairs(c);
        }
        py::list classes;
        for (const auto& cls : r.classes) {
          py::list members;
          for (const auto& mbr : cls.members) members.append(mbr.graph);
          classes.append(py::make_tuple(cls.polynomial, members));
        }
        return py::make_tuple(r.enumerated, classes);
      },
      py::arg("n"), py::arg("mode") = "digraph", py::arg("connected") = true, py::arg("seed") = 1,
      py::arg("workers") = 0, "Returns (isomorphism classes examined, [(polynomial, [members])]).");

  m.def("fig1a_left", &fig1a_left);
  m.def("fig1a_right", &fig1a_right);
  m.def("fig1b_left", &fig1b_left);
  m.def("fig1b_right", &fig1b_right);
  m.def("fig1b_partition", [] { return format_partition(fig1b_partition()); });

  m.def(
      "verify_identities",
      [](std::uint64_t seed, std::size_t trials) {
        std::vector<std::tuple<std::string, bool, std::size_t>> out;
        for (const auto& r : verify_identities(seed, trials)) out.emplace_back(r.name, r.passed(), r.trials);
        return out;
      },
      py::arg("seed") = 1, py::arg("trials") = 5);
}
