// Vertex-level polynomials of a digraph: the generalized characteristic
// polynomial, its graph restriction, the version with an all-ones term, and
// the lazy/deadly Markov numerator.
#pragma once

#include <vector>

#include "zetaeq/digraph.hpp"
#include "zetaeq/matrix.hpp"
#include "zetaeq/poly.hpp"

namespace zetaeq {

/// det(x I + tu Dout + td Din + uu A + ud A^T), with the order and edge count of its source.
struct EtaPolynomial {
  MultiPoly poly;
  std::size_t order = 0;
  long edges = 0;
};

/// det(x I + tu D + uu A) for a graph; `edges` counts each undirected edge once.
struct EtaBarPolynomial {
  MultiPoly poly;
  std::size_t order = 0;
  long edges = 0;
};

/// tu Dout + td Din + uu A + ud A^T.
PolyMatrix generalized_laplacian(const Digraph& g);

EtaPolynomial eta(const Digraph& g);
/// Throws std::invalid_argument if `g` is not symmetric.
EtaBarPolynomial eta_bar(const Digraph& g);
/// det(x I + y J + tu Dout + td Din + uu A + ud A^T); throws for non-simple input
/// and std::logic_error if the y-degree exceeds one.
MultiPoly eta_complete(const Digraph& g);

/// det((a + b) I + D).
MultiPoly markov_f(const Digraph& g);
/// f(a, b) times the Markov chain function, i.e. det((a + x a + x b) I + x D + A).
MultiPoly markov_poly(const Digraph& g);
/// det(x I + ((a + b) I + D)^{-1} (A + a I)) at a rational point; throws
/// std::domain_error when (a + b) I + D is singular.
Rational markov_value(const Digraph& g, const Rational& x, const Rational& a, const Rational& b);

/// Roots of p(x, -1, 0) with multiplicity, non-increasing. Throws
/// std::domain_error if the specialization does not split into integer roots.
std::vector<long> degree_sequence_from_eta_bar(const EtaBarPolynomial& p);

/// Equality of eta. Loops are allowed; throws std::invalid_argument for an order
/// mismatch or parallel edges.
bool zeta_equivalent_digraphs(const Digraph& g, const Digraph& h);
/// Equality of eta_bar. Throws std::invalid_argument for an order mismatch,
/// parallel edges or an asymmetric input.
bool zeta_equivalent_graphs(const Digraph& g, const Digraph& h);

}  // namespace zetaeq
