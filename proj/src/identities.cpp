#include "zetaeq/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "zetaeq/charpoly.hpp"
#include "zetaeq/invasion.hpp"
#include "zetaeq/io.hpp"
#include "zetaeq/zeta.hpp"

namespace zetaeq {

namespace {

using Failure = std::optional<std::string>;

SuiteResult run_suite(const std::string& name, std::size_t trials, const std::function<Failure(std::size_t)>& trial) {
  SuiteResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < trials; ++i) {
    Failure f;
    try {
      f = trial(i);
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    ++r.trials;
    if (f) {
      if (r.failures++ == 0) r.first_failure = "trial " + std::to_string(i) + ": " + *f;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

MultiPoly v(Var x) { return MultiPoly::var(x); }

std::string show(const Digraph& g) {
  std::string s = format_edge_list(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::string show(const WeightedDigraph& g) {
  std::string s = format_edge_list(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

Failure mismatch(const std::string& what, const std::string& instance) { return what + " on " + instance; }

MultiPoly direct_char_poly(const Digraph& g) { return characteristic_polynomial(g.adjacency()); }

}  // namespace

Rational random_rational(Rng& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return ratio(num(rng), den(rng));
}

Digraph random_simple_digraph(Rng& rng, std::size_t n, double p) {
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng, p)) g.add_edge(i, j);
  return g;
}

Digraph random_graph(Rng& rng, std::size_t n, double p, bool connected) {
  for (;;) {
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng, p)) {
          g.add_edge(i, j);
          g.add_edge(j, i);
        }
    if (!connected || g.is_weakly_connected()) return g;
  }
}

Digraph random_multidigraph(Rng& rng, std::size_t n, long max_mult, bool loops) {
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((loops || i != j) && coin(rng, 0.5))
        g.add_edge(i, j, std::uniform_int_distribution<long>(1, max_mult)(rng));
  return g;
}

WeightedDigraph random_reciprocal_digraph(Rng& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = uniform(rng, 1, max_n);
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.push_back({i, j});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(uniform(rng, 1, std::min(max_m, pairs.size())));
  WeightedDigraph g(n);
  for (const auto& [i, j] : pairs) {
    Rational w;
    if (i == j) {
      w = coin(rng, 0.5) ? 1 : -1;
    } else if (g.has_edge(j, i)) {
      w = 1 / g.weight(j, i);
    } else {
      do w = random_rational(rng, 3);
      while (sgn(w) == 0);
    }
    g.set_weight(i, j, w);
  }
  return g;
}

SuiteResult check_zeta_closed_forms(Rng& rng, std::size_t trials) {
  const Point outgoing = {{Var::tdd, Rational(1)}, {Var::tud, Rational(1)}, {Var::tdu, Rational(1)}};
  return run_suite("zeta closed forms", trials, [&](std::size_t) -> Failure {
    const WeightedDigraph g = random_reciprocal_digraph(rng, 4, 6);
    if (zeta_closed_form_reversing(g) != zeta_inverse(g, ZetaSpecialization::reversing))
      return mismatch("reversing closed form", show(g));
    if (zeta_closed_form_outgoing(g) != zeta_inverse(g, outgoing)) return mismatch("outgoing closed form", show(g));
    return std::nullopt;
  });
}

SuiteResult check_bump_algebra(Rng& rng, std::size_t trials) {
  return run_suite("bump matrix algebra", trials, [&](std::size_t) -> Failure {
    const WeightedDigraph g = random_reciprocal_digraph(rng, 4, 6);
    const BidirectionalEdgeSystem s = build_bidirectional(g);
    const RationalMatrix zero(s.size(), s.size());
    if (s.b_ud * s.b_ud != zero) return mismatch("B_ud^2 != 0", show(g));
    if (s.b_ud * s.b_du + s.b_du * s.b_ud != RationalMatrix::identity(s.size()))
      return mismatch("B_ud B_du + B_du B_ud != I", show(g));
    if (s.b_uu * s.b_uu * s.b_uu != s.b_uu) return mismatch("B_uu^3 != B_uu", show(g));
    if (s.b_dd * s.b_dd * s.b_dd != s.b_dd) return mismatch("B_dd^3 != B_dd", show(g));
    return std::nullopt;
  });
}

SuiteResult check_euler_product(Rng& rng, std::size_t trials, std::size_t order) {
  return run_suite("walk series vs log det(I - sM)", trials, [&](std::size_t) -> Failure {
    const WeightedDigraph g = random_reciprocal_digraph(rng, 3, 4);
    const BidirectionalEdgeSystem s = build_bidirectional(g);
    const PolyMatrix m = s.transfer_matrix();
    PolyMatrix a = PolyMatrix::identity(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) a(i, j) -= v(Var::t) * m(i, j);
    const MultiPoly det = det_fraction_free(a);
    std::vector<MultiPoly> c;
    for (unsigned j = 0; j <= det.degree(Var::t); ++j) c.push_back(det.coefficient(Var::t, j));
    const auto p = power_sums_from_determinant(c, order);
    const WalkTally tally = walk_series_oracle(g, order);
    for (std::size_t k = 1; k <= order; ++k)
      if (p[k] != tally.by_length[k]) return mismatch("length " + std::to_string(k) + " walk sum", show(g));
    return std::nullopt;
  });
}

SuiteResult check_ihara(Rng& rng, std::size_t trials) {
  return run_suite("Ihara determinant", trials + 1, [&](std::size_t i) -> Failure {
    if (i == 0) {
      Digraph tri(3);
      for (std::size_t k = 0; k < 3; ++k) {
        tri.add_edge(k, (k + 1) % 3);
        tri.add_edge((k + 1) % 3, k);
      }
      const MultiPoly expected = (MultiPoly(1L) - v(Var::uu).pow(3)).pow(2);
      if (zeta_inverse(tri, ZetaSpecialization::ihara) != expected) return std::string("triangle");
      if (ihara_determinant(tri) != expected) return std::string("triangle determinant form");
      return std::nullopt;
    }
    const Digraph g = random_graph(rng, uniform(rng, 2, 5), 0.5, true);
    if (zeta_inverse(g, ZetaSpecialization::ihara) != ihara_determinant(g)) return mismatch("Ihara", show(g));
    return std::nullopt;
  });
}

SuiteResult check_invasion(Rng& rng, std::size_t trials) {
  return run_suite("invasion characteristic polynomial", trials, [&](std::size_t i) -> Failure {
    const std::size_t ns = uniform(rng, 2, 5);
    Digraph s = random_multidigraph(rng, ns, 1, true);
    const std::size_t t = uniform(rng, 0, ns - 1);
    std::size_t h = uniform(rng, 0, ns - 2);
    if (h >= t) ++h;
    if (i % 2 == 0) {
      const Invader inv(s, t, h);
      const Digraph g = random_multidigraph(rng, uniform(rng, 1, 4), 2, true);
      if (invasion_char_poly(inv, g) != direct_char_poly(invade(inv, g)))
        return mismatch("invasion formula", show(s) + " into " + show(g));
      return std::nullopt;
    }
    std::vector<std::size_t> swap(ns);
    for (std::size_t k = 0; k < ns; ++k) swap[k] = k;
    std::swap(swap[t], swap[h]);
    const Digraph image = s.relabel(Permutation(swap));
    for (std::size_t a = 0; a < ns; ++a)
      for (std::size_t b = 0; b < ns; ++b)
        s.set_multiplicity(a, b, std::max(s.multiplicity(a, b), image.multiplicity(a, b)));
    const Invader inv(s, t, h);
    const Digraph g = random_graph(rng, uniform(rng, 1, 4), 0.6, false);
    if (symmetric_invasion_char_poly(inv, g) != direct_char_poly(symmetric_invade(inv, g)))
      return mismatch("symmetric invasion formula", show(s) + " into " + show(g));
    return std::nullopt;
  });
}

SuiteResult check_path_invaders(Rng& rng, std::size_t max_order) {
  return run_suite("path invaders", max_order, [&](std::size_t i) -> Failure {
    if (i == 0) {
      Digraph c3(3), c6(6);
      for (std::size_t k = 0; k < 3; ++k) {
        c3.add_edge(k, (k + 1) % 3);
        c3.add_edge((k + 1) % 3, k);
      }
      for (std::size_t k = 0; k < 6; ++k) {
        c6.add_edge(k, (k + 1) % 6);
        c6.add_edge((k + 1) % 6, k);
      }
      const MultiPoly x = v(Var::x);
      const MultiPoly expected = (x * x - MultiPoly(4L)) * (x * x - MultiPoly(1L)).pow(2);
      const Invader p3 = undirected_path_invader(3);
      if (subdivision_formula(3, c3) != expected) return std::string("subdivided triangle formula");
      if (direct_char_poly(symmetric_invade(p3, c3)) != expected) return std::string("subdivided triangle");
      if (!is_isomorphic(symmetric_invade(p3, c3), c6)) return std::string("subdivided triangle is not C6");
      return std::nullopt;
    }
    const std::size_t k = i + 1;
    const Digraph g = random_multidigraph(rng, uniform(rng, 1, 4), 2, true);
    const Invader directed = directed_path_invader(k), undirected = undirected_path_invader(k);
    const MultiPoly d = direct_char_poly(invade(directed, g));
    if (directed_path_invasion_formula(k, g) != d || invasion_char_poly(directed, g) != d)
      return mismatch("directed path of order " + std::to_string(k), show(g));
    const MultiPoly u = direct_char_poly(invade(undirected, g));
    if (undirected_path_invasion_formula(k, g) != u || invasion_char_poly(undirected, g) != u)
      return mismatch("undirected path of order " + std::to_string(k), show(g));
    const Digraph graph = random_graph(rng, uniform(rng, 1, 5), 0.5, false);
    const MultiPoly sub = direct_char_poly(symmetric_invade(undirected, graph));
    if (subdivision_formula(k, graph) != sub || symmetric_invasion_char_poly(undirected, graph) != sub)
      return mismatch("subdivision by a path of order " + std::to_string(k), show(graph));
    return std::nullopt;
  });
}

SuiteResult check_markov(Rng& rng, std::size_t graphs, std::size_t points) {
  return run_suite("Markov numerator identity", graphs, [&](std::size_t) -> Failure {
    const Digraph g = random_graph(rng, uniform(rng, 1, 6), 0.5, false);
    const MultiPoly eb = eta_bar(g).poly;
    const MultiPoly shifted = v(Var::a) + v(Var::x) * v(Var::a) + v(Var::x) * v(Var::b);
    const MultiPoly composed = eb.substitute(Var::x, shifted).substitute(Var::tu, v(Var::x)).substitute(Var::uu, 1L);
    const MultiPoly numerator = markov_poly(g);
    if (composed != numerator) return mismatch("f mu != eta_bar(a + xa + xb, x, 1)", show(g));
    const MultiPoly f = markov_f(g);
    for (std::size_t k = 0; k < points; ++k) {
      const Rational x = random_rational(rng, 5), a = random_rational(rng, 5), b = random_rational(rng, 5);
      const Rational fv = f.eval({{Var::a, a}, {Var::b, b}});
      if (sgn(fv) == 0) continue;
      const Rational lhs = fv * markov_value(g, x, a, b);
      const Rational rhs = eb.eval({{Var::x, a + x * a + x * b}, {Var::tu, x}, {Var::uu, Rational(1)}});
      if (lhs != rhs) return mismatch("pointwise Markov identity", show(g));
    }
    return std::nullopt;
  });
}

SuiteResult check_complete_y_degree(Rng& rng, std::size_t trials) {
  return run_suite("all-ones term has y-degree <= 1", trials, [&](std::size_t) -> Failure {
    const Digraph g = random_simple_digraph(rng, uniform(rng, 1, 5), std::uniform_real_distribution<double>(0, 1)(rng));
    if (eta_complete(g).degree(Var::y) > 1) return mismatch("y-degree above one", show(g));
    return std::nullopt;
  });
}

SuiteResult check_degree_sequences(Rng& rng, std::size_t trials) {
  return run_suite("degree sequence from eta_bar", trials, [&](std::size_t) -> Failure {
    const Digraph g = random_graph(rng, uniform(rng, 1, 7), 0.5, false);
    std::vector<long> degrees = g.out_degrees();
    std::sort(degrees.rbegin(), degrees.rend());
    if (degree_sequence_from_eta_bar(eta_bar(g)) != degrees) return mismatch("degree sequence", show(g));
    return std::nullopt;
  });
}

std::vector<SuiteResult> verify_identities(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(check_zeta_closed_forms(rng, trials));
  out.push_back(check_bump_algebra(rng, trials));
  out.push_back(check_euler_product(rng, trials, 8));
  out.push_back(check_ihara(rng, trials));
  out.push_back(check_invasion(rng, trials));
  out.push_back(check_path_invaders(rng, 6));
  out.push_back(check_markov(rng, trials, 10));
  out.push_back(check_complete_y_degree(rng, trials));
  out.push_back(check_degree_sequences(rng, trials));
  return out;
}

}  // namespace zetaeq
