#include "zetaeq/charpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zetaeq {

namespace {

const MultiPoly& var_poly(Var v) {
  static const auto table = [] {
    std::vector<MultiPoly> t;
    for (std::size_t i = 0; i < kVarCount; ++i) t.push_back(MultiPoly::var(static_cast<Var>(i)));
    return t;
  }();
  return table[static_cast<std::size_t>(v)];
}

void add_diagonal(PolyMatrix& m, const MultiPoly& p) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += p;
}

void require_graph(const Digraph& g) {
  if (!g.is_graph()) throw std::invalid_argument("expected a graph (symmetric adjacency matrix)");
}

}  // namespace

PolyMatrix generalized_laplacian(const Digraph& g) {
  const auto& a = g.adjacency();
  PolyMatrix m = scaled(var_poly(Var::tu), g.out_degree_matrix());
  m += scaled(var_poly(Var::td), g.in_degree_matrix());
  m += scaled(var_poly(Var::uu), a);
  m += scaled(var_poly(Var::ud), a.transpose());
  return m;
}

EtaPolynomial eta(const Digraph& g) {
  PolyMatrix m = generalized_laplacian(g);
  add_diagonal(m, var_poly(Var::x));
  return {det_fraction_free(m), g.order(), g.edge_count()};
}

EtaBarPolynomial eta_bar(const Digraph& g) {
  require_graph(g);
  PolyMatrix m = scaled(var_poly(Var::tu), g.out_degree_matrix());
  m += scaled(var_poly(Var::uu), g.adjacency());
  add_diagonal(m, var_poly(Var::x));
  long loops = 0;
  for (std::size_t i = 0; i < g.order(); ++i) loops += g.multiplicity(i, i);
  return {det_fraction_free(m), g.order(), (g.edge_count() + loops) / 2};
}

MultiPoly eta_complete(const Digraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("expected a simple digraph");
  PolyMatrix m = generalized_laplacian(g);
  add_diagonal(m, var_poly(Var::x));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) m(i, j) += var_poly(Var::y);
  MultiPoly p = det_fraction_free(m);
  if (p.degree(Var::y) > 1) throw std::logic_error("y-degree of the completed polynomial exceeds one");
  return p;
}

MultiPoly markov_f(const Digraph& g) {
  require_graph(g);
  PolyMatrix m = to_poly(g.out_degree_matrix());
  add_diagonal(m, var_poly(Var::a) + var_poly(Var::b));
  return det_fraction_free(m);
}

MultiPoly markov_poly(const Digraph& g) {
  require_graph(g);
  const MultiPoly& x = var_poly(Var::x);
  PolyMatrix m = scaled(x, g.out_degree_matrix());
  m += to_poly(g.adjacency());
  add_diagonal(m, var_poly(Var::a) + x * var_poly(Var::a) + x * var_poly(Var::b));
  return det_fraction_free(m);
}

Rational markov_value(const Digraph& g, const Rational& x, const Rational& a, const Rational& b) {
  require_graph(g);
  const std::size_t n = g.order();
  RationalMatrix lazy = to_rational(g.out_degree_matrix());
  RationalMatrix step = to_rational(g.adjacency());
  for (std::size_t i = 0; i < n; ++i) {
    lazy(i, i) += a + b;
    step(i, i) += a;
  }
  RationalMatrix m = inverse(lazy) * step;
  for (std::size_t i = 0; i < n; ++i) m(i, i) += x;
  return determinant(m);
}

std::vector<long> degree_sequence_from_eta_bar(const EtaBarPolynomial& p) {
  MultiPoly spec = p.poly.specialize({{Var::tu, Rational(-1)}, {Var::uu, Rational(0)}});
  std::vector<Rational> c = spec.univariate_coefficients(Var::x);
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty() || c.back() != 1) throw std::domain_error("specialization is not monic in x");
  std::vector<long> roots;
  // Zero roots first, then nonnegative integers up to the root sum.
  std::size_t low = 0;
  while (low + 1 < c.size() && c[low] == 0) ++low;
  roots.insert(roots.end(), low, 0L);
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  Rational sum = c.size() >= 2 ? Rational(-c[c.size() - 2]) : Rational(0);
  if (sum.get_den() != 1 || sgn(sum) < 0) throw std::domain_error("roots are not nonnegative integers");
  const long bound = sum.get_num().get_si();
  for (long r = 1; r <= bound && c.size() > 1; ++r) {
    while (c.size() > 1) {
      // Synthetic division by (x - r).
      std::vector<Rational> q(c.size() - 1);
      Rational carry = 0;
      for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] + carry * r;
        q[i - 1] = carry;
      }
      if (c[0] + carry * r != 0) break;
      roots.push_back(r);
      c = std::move(q);
    }
  }
  if (c.size() != 1) throw std::domain_error("specialization has a non-integer root");
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

namespace {

void require_comparable(const Digraph& g, const Digraph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("vertex counts differ");
  for (const Digraph* d : {&g, &h})
    for (std::size_t i = 0; i < d->order(); ++i)
      for (std::size_t j = 0; j < d->order(); ++j)
        if (d->multiplicity(i, j) > 1) throw std::invalid_argument("parallel edges are not allowed");
}

}  // namespace

bool zeta_equivalent_digraphs(const Digraph& g, const Digraph& h) {
  require_comparable(g, h);
  if (g.edge_count() != h.edge_count()) return false;
  return eta(g).poly == eta(h).poly;
}

bool zeta_equivalent_graphs(const Digraph& g, const Digraph& h) {
  require_comparable(g, h);
  require_graph(g);
  require_graph(h);
  if (g.edge_count() != h.edge_count()) return false;
  return eta_bar(g).poly == eta_bar(h).poly;
}

}  // namespace zetaeq
