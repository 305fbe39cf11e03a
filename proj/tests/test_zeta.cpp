#include <doctest.h>

#include "oracles.hpp"
#include "zetaeq/identities.hpp"
#include "zetaeq/zeta.hpp"

using namespace zetaeq;

namespace {

MultiPoly v(Var x) { return MultiPoly::var(x); }
MultiPoly one() { return MultiPoly(1L); }

std::size_t nonzeros(const RationalMatrix& m) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k += sgn(m(i, j)) != 0;
  return k;
}

PolyMatrix specialize(const PolyMatrix& m, const Point& p) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).specialize(p);
  return out;
}

// det(I - M) by cofactor expansion, specialized first.
MultiPoly cofactor_zeta(const WeightedDigraph& g, const Point& p) {
  const PolyMatrix m = specialize(build_bidirectional(g).transfer_matrix(), p);
  PolyMatrix a = PolyMatrix::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) -= m(i, j);
  return oracle::cofactor_det(a);
}

WeightedDigraph directed_cycle(std::size_t n) {
  WeightedDigraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.set_weight(i, (i + 1) % n, 1);
  return g;
}

WeightedDigraph triangle() {
  WeightedDigraph g(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) g.set_weight(i, j, 1);
  return g;
}

// Bartholdi: (1 - (1-t)^2 u^2)^(m-n) det(I - u A + (1-t) u^2 (D - (1-t) I)), t = tuu, u = uu.
MultiPoly bartholdi(const Digraph& g) {
  const std::size_t n = g.order();
  const MultiPoly u = v(Var::uu), c = one() - v(Var::tuu);
  const auto d = g.out_degrees();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = -u * Rational(g.multiplicity(i, j));
    m(i, i) += one() + c * u * u * (MultiPoly(d[i]) - c);
  }
  const long excess = g.edge_count() / 2 - static_cast<long>(n);
  MultiPoly det = oracle::cofactor_det(m);
  const MultiPoly f = one() - c * c * u * u;
  if (excess >= 0) return det * f.pow(static_cast<unsigned>(excess));
  return det.divide_exact(f.pow(static_cast<unsigned>(-excess)));
}

}  // namespace

TEST_CASE("bidirectional edge systems") {
  WeightedDigraph arc(2);
  arc.set_weight(0, 1, 1);
  BidirectionalEdgeSystem s = build_bidirectional(arc);
  REQUIRE(s.size() == 2);
  CHECK(s.edges[0].dir == Direction::up);
  CHECK(s.edges[1].dir == Direction::down);
  CHECK(s.reverse(0, 1));
  CHECK(nonzeros(s.c_up) == 1);
  CHECK(nonzeros(s.c_down) == 1);
  CHECK(nonzeros(s.b_ud) == 1);
  CHECK(nonzeros(s.b_du) == 1);
  CHECK(nonzeros(s.b_uu) == 0);
  CHECK(nonzeros(s.b_dd) == 0);

  WeightedDigraph loop(1);
  loop.set_weight(0, 0, 1);
  s = build_bidirectional(loop);
  REQUIRE(s.size() == 2);
  CHECK(s.edges[0].tail == 0);
  CHECK(s.edges[1].head == 0);
  CHECK(s.edges[0].dir != s.edges[1].dir);

  WeightedDigraph two(2);
  two.set_weight(0, 1, 2);
  two.set_weight(1, 0, ratio(1, 2));
  s = build_bidirectional(two);
  REQUIRE(s.size() == 4);
  CHECK(s.edges[1].weight == ratio(1, 2));
  CHECK(nonzeros(s.b_uu) == 2);
  CHECK(nonzeros(s.b_dd) == 2);
  // tail incidence: one entry per edge
  for (std::size_t e = 0; e < 4; ++e) CHECK(s.tail_incidence(s.edges[e].tail, e) == 1);

  WeightedDigraph bad(1);
  bad.set_weight(0, 0, 2);
  CHECK_THROWS_AS(build_bidirectional(bad), std::invalid_argument);
}

TEST_CASE("bump matrix algebra") {
  Rng rng(41);
  const SuiteResult r = check_bump_algebra(rng, 30);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("small zeta functions") {
  CHECK(zeta_inverse(WeightedDigraph(0)) == one());
  CHECK(zeta_inverse(WeightedDigraph(3)) == one());
  const MultiPoly u = v(Var::uu);
  CHECK(zeta_inverse(directed_cycle(3), ZetaSpecialization::outgoing) == one() - u.pow(3));
  CHECK(zeta_inverse(triangle(), ZetaSpecialization::ihara) == (one() - u.pow(3)).pow(2));
  CHECK(ihara_determinant(triangle().unweighted()) == (one() - u.pow(3)).pow(2));

  const Point outgoing = specialization_point(ZetaSpecialization::outgoing);
  CHECK(zeta_inverse(directed_cycle(3), ZetaSpecialization::outgoing) ==
        zeta_inverse(directed_cycle(3)).specialize(outgoing));
  CHECK(zeta_inverse(directed_cycle(3).unweighted(), ZetaSpecialization::outgoing) == one() - u.pow(3));
}

TEST_CASE("zeta_inverse matches a cofactor determinant of I - M") {
  Rng rng(42);
  for (int k = 0; k < 8; ++k) {
    const WeightedDigraph g = random_reciprocal_digraph(rng, 3, 3);
    CHECK(zeta_inverse(g) == cofactor_zeta(g, {}));
  }
}

TEST_CASE("reversing closed form on a single loop") {
  WeightedDigraph loop(1);
  loop.set_weight(0, 0, 1);
  const MultiPoly uu = v(Var::uu), ud = v(Var::ud);
  const MultiPoly su = uu * (v(Var::tud) - one()), sd = ud * (v(Var::tdu) - one());
  const MultiPoly expected = one() - su * sd - uu - ud - su * ud - sd * uu;
  CHECK(zeta_closed_form_reversing(loop) == expected);
  CHECK(zeta_inverse(loop, ZetaSpecialization::reversing) == expected);
  CHECK(cofactor_zeta(loop, specialization_point(ZetaSpecialization::reversing)) == expected);
}

TEST_CASE("reversing closed form on one undirected weighted edge") {
  WeightedDigraph two(2);
  two.set_weight(0, 1, 2);
  two.set_weight(1, 0, ratio(1, 2));
  const Point rev = specialization_point(ZetaSpecialization::reversing);
  CHECK(zeta_closed_form_reversing(two) == cofactor_zeta(two, rev));
  CHECK(zeta_closed_form_reversing(two) == zeta_inverse(two, ZetaSpecialization::reversing));
  two.set_weight(1, 0, 2);
  CHECK_THROWS_AS(zeta_closed_form_reversing(two), std::invalid_argument);
  CHECK_THROWS_AS(zeta_closed_form_outgoing(two), std::invalid_argument);
}

TEST_CASE("outgoing closed form specializes to Bartholdi and Ihara") {
  const Point bump_free = {{Var::tuu, Rational(0)}, {Var::ud, Rational(0)}};
  const MultiPoly closed = zeta_closed_form_outgoing(triangle());
  CHECK(closed.specialize({{Var::ud, Rational(0)}}) == bartholdi(triangle().unweighted()));
  CHECK(closed.specialize({{Var::ud, Rational(0)}}) == zeta_inverse(triangle(), ZetaSpecialization::outgoing));
  CHECK(closed.specialize(bump_free) == (one() - v(Var::uu).pow(3)).pow(2));
  CHECK(closed.specialize(bump_free) == zeta_inverse(triangle(), ZetaSpecialization::ihara));

  Rng rng(43);
  for (int k = 0; k < 6; ++k) {
    const Digraph g = random_graph(rng, 2 + k % 4, 0.6, true);
    const WeightedDigraph w = WeightedDigraph::unit_weights(g);
    CHECK(zeta_inverse(w, ZetaSpecialization::outgoing) == bartholdi(g));
    CHECK(zeta_inverse(w, ZetaSpecialization::ihara) == ihara_determinant(g));
  }
}

TEST_CASE("closed forms on random reciprocal digraphs") {
  Rng rng(44);
  const SuiteResult r = check_zeta_closed_forms(rng, 15);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("walk tallies on the directed 3-cycle") {
  const WalkTally t = walk_series_oracle(directed_cycle(3), 6);
  REQUIRE(t.by_length.size() == 7);
  CHECK(t.by_length[1] == MultiPoly());
  for (std::size_t k = 2; k <= 6; ++k) CHECK(t.by_length[k] != MultiPoly());
  const Point outgoing = specialization_point(ZetaSpecialization::outgoing);
  const MultiPoly u = v(Var::uu);
  for (std::size_t k = 1; k <= 6; ++k) {
    const MultiPoly expected = k == 3 ? u.pow(3) * Rational(3) : k == 6 ? u.pow(6) * Rational(3) : MultiPoly();
    CHECK(t.by_length[k].specialize(outgoing) == expected);
  }
  const WalkTally empty = walk_series_oracle(WeightedDigraph(2), 4);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(empty.by_length[k] == MultiPoly());
}

TEST_CASE("walk tallies are traces of powers of M") {
  Rng rng(45);
  for (int k = 0; k < 5; ++k) {
    const WeightedDigraph g = random_reciprocal_digraph(rng, 3, 3);
    const PolyMatrix m = build_bidirectional(g).transfer_matrix();
    const WalkTally t = walk_series_oracle(g, 4);
    PolyMatrix power = m;
    for (std::size_t len = 1; len <= 4; ++len) {
      MultiPoly trace;
      for (std::size_t i = 0; i < power.rows(); ++i) trace += power(i, i);
      CHECK(t.by_length[len] == trace);
      power = power * m;
    }
  }
}

TEST_CASE("power sums from a determinant") {
  // det(I - s diag(a, b)) = 1 - (a + b) s + a b s^2
  const MultiPoly a = v(Var::uu), b = v(Var::ud);
  const std::vector<MultiPoly> c = {one(), -(a + b), a * b};
  const auto p = power_sums_from_determinant(c, 4);
  for (unsigned k = 1; k <= 4; ++k) CHECK(p[k] == a.pow(k) + b.pow(k));
}

TEST_CASE("Euler product to order 8") {
  Rng rng(46);
  const SuiteResult r = check_euler_product(rng, 4, 8);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}
