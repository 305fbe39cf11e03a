// Randomized exact identity suites shared by the `verify-identities` command
// and the acceptance checks, plus the random instance generators they draw from.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zetaeq/digraph.hpp"

namespace zetaeq {

using Rng = std::mt19937_64;

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;  // description of the first failing instance
  double seconds = 0;
  bool passed() const { return trials > 0 && failures == 0; }
};

/// Loop-free simple digraph, each ordered pair an edge with probability p.
Digraph random_simple_digraph(Rng& rng, std::size_t n, double p);
/// Loop-free simple graph; resampled until connected when `connected`.
Digraph random_graph(Rng& rng, std::size_t n, double p, bool connected);
/// Digraph with multiplicities in [0, max_mult] and optional loops.
Digraph random_multidigraph(Rng& rng, std::size_t n, long max_mult, bool loops);
/// n in [1, max_n], at most max_m edges (loops allowed), weights p/q with
/// |p|, q <= 3, reciprocal on 2-cycles, loops weighted +-1.
WeightedDigraph random_reciprocal_digraph(Rng& rng, std::size_t max_n, std::size_t max_m);
/// A rational p/q with |p| <= bound, 1 <= q <= bound.
Rational random_rational(Rng& rng, long bound);

/// Reversing and outgoing closed forms against specializations of det(I - M).
SuiteResult check_zeta_closed_forms(Rng& rng, std::size_t trials);
/// B_ud^2 = 0, B_ud B_du + B_du B_ud = I, B_uu^3 = B_uu.
SuiteResult check_bump_algebra(Rng& rng, std::size_t trials);
/// Closed-walk sums against the log-expansion of det(I - s M) up to `order`.
SuiteResult check_euler_product(Rng& rng, std::size_t trials, std::size_t order);
/// Triangle equals (1 - u^3)^2; random connected graphs match the Ihara determinant.
SuiteResult check_ihara(Rng& rng, std::size_t trials);
/// Invasion formula against the direct characteristic polynomial, ordinary and symmetric.
SuiteResult check_invasion(Rng& rng, std::size_t trials);
/// Directed-path, undirected-path and subdivision formulas for paths up to `max_order`
/// vertices, and the subdivided triangle.
SuiteResult check_path_invaders(Rng& rng, std::size_t max_order);
/// f(a, b) mu(x, a, b) = eta_bar(a + x a + x b, x, 1), as polynomials and at random points.
SuiteResult check_markov(Rng& rng, std::size_t graphs, std::size_t points);
/// eta with the all-ones term has y-degree at most one.
SuiteResult check_complete_y_degree(Rng& rng, std::size_t trials);
/// The degree sequence recovered from eta_bar matches the graph.
SuiteResult check_degree_sequences(Rng& rng, std::size_t trials);

/// Every suite above with `trials` instances each, from one seed.
std::vector<SuiteResult> verify_identities(std::uint64_t seed, std::size_t trials);

}  // namespace zetaeq
