#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "zetaeq/charpoly.hpp"
#include "zetaeq/figures.hpp"
#include "zetaeq/identities.hpp"
#include "zetaeq/search.hpp"

using namespace zetaeq;

namespace {

MultiPoly v(Var x) { return MultiPoly::var(x); }

Digraph k2() {
  Digraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  return g;
}

}  // namespace

TEST_CASE("eta of tiny digraphs") {
  Digraph loop(1);
  loop.add_edge(0, 0);
  CHECK(eta(loop).poly == v(Var::x) + v(Var::tu) + v(Var::td) + v(Var::uu) + v(Var::ud));
  Digraph arc(2);
  arc.add_edge(0, 1);
  CHECK(eta(arc).poly == v(Var::x).pow(2) + (v(Var::tu) + v(Var::td)) * v(Var::x) + v(Var::tu) * v(Var::td) -
                             v(Var::uu) * v(Var::ud));
  CHECK(eta(arc).order == 2);
  CHECK(eta(arc).edges == 1);
}

TEST_CASE("eta matches the defining determinant") {
  Rng rng(31);
  for (int k = 0; k < 20; ++k) {
    const Digraph g = random_multidigraph(rng, 1 + k % 5, 2, true);
    CHECK(eta(g).poly == oracle::cofactor_det(oracle::laplacian_matrix(g)));
  }
  CHECK(eta(fig1a_left()).poly == eta(fig1a_right()).poly);
  CHECK(oracle::cofactor_det(oracle::laplacian_matrix(fig1a_left())) ==
        oracle::cofactor_det(oracle::laplacian_matrix(fig1a_right())));
}

TEST_CASE("eta is homogeneous and transposes by swapping variables") {
  Rng rng(32);
  for (int k = 0; k < 20; ++k) {
    const Digraph g = random_multidigraph(rng, 1 + k % 5, 1, true);
    const MultiPoly p = eta(g).poly;
    const MultiPoly lambda(random_rational(rng, 4));
    MultiPoly scaled = p;
    for (Var x : {Var::x, Var::tu, Var::td, Var::uu, Var::ud}) scaled = scaled.substitute(x, lambda * v(x));
    CHECK(scaled == p * lambda.pow(static_cast<unsigned>(g.order())));
    const MultiPoly swapped = p.substitute(Var::tu, v(Var::a))
                                  .substitute(Var::td, v(Var::tu))
                                  .substitute(Var::a, v(Var::td))
                                  .substitute(Var::uu, v(Var::b))
                                  .substitute(Var::ud, v(Var::uu))
                                  .substitute(Var::b, v(Var::ud));
    CHECK(eta(g.transpose()).poly == swapped);
  }
}

TEST_CASE("eta_bar") {
  const MultiPoly t = v(Var::tu), u = v(Var::uu), x = v(Var::x);
  CHECK(eta_bar(k2()).poly == (x + t).pow(2) - u.pow(2));
  CHECK(eta_bar(fig1b_left()).poly == eta_bar(fig1b_right()).poly);
  CHECK_THROWS_AS(eta_bar(fig1a_left()), std::invalid_argument);
  Rng rng(33);
  for (int k = 0; k < 20; ++k) {
    const Digraph g = random_graph(rng, 1 + k % 6, 0.5, false);
    const MultiPoly chi = eta_bar(g).poly.specialize({{Var::tu, Rational(0)}, {Var::uu, Rational(-1)}});
    CHECK(chi == oracle::char_poly(g.adjacency()));
  }
}

TEST_CASE("eta with the all-ones term") {
  CHECK(eta_complete(Digraph(1)) == v(Var::x) + v(Var::y));
  Rng rng(34);
  const Point zero_t = {{Var::x, Rational(1)},  {Var::tu, Rational(0)}, {Var::td, Rational(0)},
                        {Var::uu, Rational(0)}, {Var::ud, Rational(0)}};
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 6;
    const Digraph g = random_simple_digraph(rng, n, 0.5);
    const MultiPoly c = eta_complete(g);
    CHECK(c.degree(Var::y) <= 1);
    CHECK(c.specialize(zero_t) == MultiPoly(1L) + v(Var::y) * Rational(static_cast<long>(n)));
    CHECK(c.specialize({{Var::y, Rational(0)}}) == eta(g).poly);
  }
  Digraph multi(2);
  multi.add_edge(0, 1, 2);
  CHECK_THROWS_AS(eta_complete(multi), std::invalid_argument);
}

TEST_CASE("Markov numerator") {
  const MultiPoly x = v(Var::x), a = v(Var::a), b = v(Var::b);
  CHECK(markov_poly(Digraph(1)) == a * x + b * x + a);
  const Rational one(1);
  CHECK(markov_f(k2()).eval({{Var::a, one}, {Var::b, one}}) == 9);
  CHECK(markov_value(k2(), one, one, one) == ratio(15, 9));
  CHECK(markov_poly(k2()).eval({{Var::x, one}, {Var::a, one}, {Var::b, one}}) == 15);
  CHECK(eta_bar(k2()).poly.eval({{Var::x, Rational(3)}, {Var::tu, one}, {Var::uu, one}}) == 15);
  CHECK(markov_poly(fig1b_left()) == markov_poly(fig1b_right()));
  // direct rational oracle: det(x I + ((a+b) I + D)^-1 (A + a I)) by cofactor expansion
  Rng rng(35);
  const Digraph h = random_graph(rng, 4, 0.6, false);
  const Rational xv = ratio(2, 3), av = ratio(-1, 2), bv = 3;
  RationalMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational scale = 1 / (av + bv + h.out_degrees()[i]);
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = scale * (h.multiplicity(i, j) + (i == j ? av : Rational(0)));
    m(i, i) += xv;
  }
  CHECK(markov_value(h, xv, av, bv) == oracle::cofactor_det(m));
}

TEST_CASE("degree sequences from eta_bar") {
  CHECK(degree_sequence_from_eta_bar(eta_bar(k2())) == std::vector<long>{1, 1});
  CHECK(degree_sequence_from_eta_bar(eta_bar(Digraph(3))) == std::vector<long>{0, 0, 0});
  const auto left = degree_sequence_from_eta_bar(eta_bar(fig1b_left()));
  std::vector<long> counted = fig1b_left().out_degrees();
  std::sort(counted.rbegin(), counted.rend());
  CHECK(counted == std::vector<long>{5, 5, 4, 4, 4, 4, 4, 3, 3});
  CHECK(left == counted);
  CHECK(left == degree_sequence_from_eta_bar(eta_bar(fig1b_right())));
  Rng rng(36);
  for (int k = 0; k < 30; ++k) {
    const Digraph g = random_graph(rng, 1 + k % 7, 0.5, false);
    std::vector<long> d = g.out_degrees();
    std::sort(d.rbegin(), d.rend());
    CHECK(degree_sequence_from_eta_bar(eta_bar(g)) == d);
  }
}

TEST_CASE("zeta-equivalence predicates") {
  CHECK(zeta_equivalent_digraphs(fig1a_left(), fig1a_right()));
  CHECK(zeta_equivalent_graphs(fig1b_left(), fig1b_right()));
  Digraph cycle(3), looped(3);
  for (std::size_t i = 0; i < 3; ++i) cycle.add_edge(i, (i + 1) % 3);
  looped.add_edge(0, 1);
  looped.add_edge(1, 2);
  looped.add_edge(2, 2);
  CHECK(!zeta_equivalent_digraphs(cycle, looped));
  Digraph doubled(3);
  doubled.add_edge(0, 1, 2);
  CHECK_THROWS_AS(zeta_equivalent_digraphs(doubled, cycle), std::invalid_argument);
  CHECK_THROWS_AS(zeta_equivalent_graphs(k2(), Digraph(3)), std::invalid_argument);
}

TEST_CASE("Markov equality at b = 1 coincides with eta_bar equality on connected graphs") {
  // mu = N / f; equal values at a point separate classes, cross-multiplication confirms.
  const Point b1 = {{Var::b, Rational(1)}};
  const Point probe = {{Var::x, ratio(3, 7)}, {Var::a, ratio(-5, 11)}, {Var::b, Rational(1)}};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto reps = enumerate({n, SearchMode::graph, Connectivity::weak, 1, 1});
    std::vector<MultiPoly> num, f;
    std::vector<std::string> eb;
    std::map<Rational, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      num.push_back(markov_poly(reps[i].graph).specialize(b1));
      f.push_back(markov_f(reps[i].graph).specialize(b1));
      eb.push_back(eta_bar(reps[i].graph).poly.to_string());
      by_value[num[i].eval(probe) / f[i].eval(probe)].push_back(i);
    }
    std::size_t mu_pairs = 0, eta_pairs = 0;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) eta_pairs += eb[i] == eb[j];
    for (const auto& [value, members] : by_value)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const std::size_t p = members[i], q = members[j];
          const bool mu_equal = num[p] * f[q] == num[q] * f[p];
          mu_pairs += mu_equal;
          CHECK(mu_equal == (eb[p] == eb[q]));
        }
    CHECK(mu_pairs == eta_pairs);
  }
}
