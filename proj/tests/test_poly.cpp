#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "zetaeq/charpoly.hpp"
#include "zetaeq/figures.hpp"
#include "zetaeq/identities.hpp"

using namespace zetaeq;

namespace {

MultiPoly v(Var x) { return MultiPoly::var(x); }

MultiPoly random_poly(Rng& rng, std::size_t terms, unsigned max_exp) {
  static constexpr Var vars[] = {Var::x, Var::tu, Var::uu, Var::ud};
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::uniform_int_distribution<long> c(-4, 4);
  MultiPoly p;
  for (std::size_t k = 0; k < terms; ++k) {
    MultiPoly m(c(rng));
    for (Var x : vars) m *= v(x).pow(e(rng));
    p += m;
  }
  return p;
}

PolyMatrix random_poly_matrix(Rng& rng, std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, 2, 1);
  return m;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK((v(Var::x) + MultiPoly(1L)) * (v(Var::x) - MultiPoly(1L)) == v(Var::x).pow(2) - MultiPoly(1L));
  const MultiPoly p = v(Var::x) * v(Var::uu) + MultiPoly(3L);
  CHECK(p + MultiPoly() == p);
  const MultiPoly m = v(Var::uu) * v(Var::ud);
  CHECK(m * m == v(Var::uu).pow(2) * v(Var::ud).pow(2));
  CHECK((m * m).to_string() == "uu^2*ud^2");
  CHECK((v(Var::x).pow(2) - m).to_string() == "x^2 - uu*ud");
  CHECK(MultiPoly().to_string() == "0");
  CHECK((v(Var::x) * ratio(-1, 2)).to_string() == "-1/2*x");
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const MultiPoly a = random_poly(rng, 4, 2), b = random_poly(rng, 4, 2), c = random_poly(rng, 4, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a - a == MultiPoly());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    const MultiPoly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3);
    const Point pt = {{Var::x, random_rational(rng, 5)},
                      {Var::tu, random_rational(rng, 5)},
                      {Var::uu, random_rational(rng, 5)},
                      {Var::ud, random_rational(rng, 5)}};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
  const MultiPoly p = v(Var::x).pow(2) - v(Var::uu) * v(Var::ud);
  CHECK(p.eval({{Var::x, Rational(3)}, {Var::uu, Rational(2)}, {Var::ud, Rational(1)}}) == 7);
  CHECK(MultiPoly(5L).eval({}) == 5);
  CHECK_THROWS_AS(p.eval({{Var::x, Rational(3)}}), std::invalid_argument);
}

TEST_CASE("substitution, division and coefficients") {
  const MultiPoly x = v(Var::x), t = v(Var::tu);
  const MultiPoly p = (x + t).pow(3);
  CHECK(p.substitute(Var::tu, -x) == MultiPoly());
  CHECK(p.divide_exact(x + t) == (x + t).pow(2));
  CHECK_THROWS_AS(p.divide_exact(x - t), std::domain_error);
  CHECK(p.coefficient(Var::x, 2) == t * Rational(3));
  CHECK(p.degree(Var::x) == 3);
  const auto c = (x.pow(2) - MultiPoly(1L)).univariate_coefficients(Var::x);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == -1);
  CHECK(c[2] == 1);
  CHECK(ratio(2, 4) == ratio(1, 2));
  CHECK(ratio(2, 4).get_den() == 2);
}

TEST_CASE("small determinants") {
  const PolyMatrix m = {{v(Var::x), v(Var::uu)}, {v(Var::ud), v(Var::x)}};
  CHECK(det_fraction_free(m) == v(Var::x).pow(2) - v(Var::uu) * v(Var::ud));
  CHECK(det_fraction_free(PolyMatrix::identity(3)) == MultiPoly(1L));
  CHECK(det_fraction_free(PolyMatrix(0, 0)) == MultiPoly(1L));
  CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(determinant(RationalMatrix{{ratio(1, 2), 1}, {1, 2}}) == 0);
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  Rng rng(13);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int k = 0; k < (n <= 3 ? 10 : 3); ++k) {
      const PolyMatrix m = random_poly_matrix(rng, n);
      CHECK(det_fraction_free(m) == oracle::cofactor_det(m));
    }
  }
  for (int k = 0; k < 10; ++k) {
    IntMatrix a(4, 4);
    std::uniform_int_distribution<long> d(-5, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = d(rng);
    CHECK(Integer(oracle::cofactor_det(to_rational(a))) == determinant(a));
    CHECK(det_fraction_free(to_poly(a)) == MultiPoly(Rational(determinant(a))));
  }
}

TEST_CASE("adjugate of the characteristic matrix") {
  CHECK(adjugate_char_matrix(IntMatrix{{0}})(0, 0) == MultiPoly(1L));
  const PolyMatrix zero = adjugate_char_matrix(IntMatrix(2, 2));
  CHECK(zero(0, 0) == v(Var::x));
  CHECK(zero(0, 1) == MultiPoly());
  const IntMatrix path = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  const PolyMatrix adj = adjugate_char_matrix(path);
  CHECK(adj(0, 2) == MultiPoly(1L));
  CHECK(adj(0, 0) == v(Var::x).pow(2) - MultiPoly(1L));
  // signed minor of xI - A, computed directly
  const PolyMatrix xa = oracle::x_minus(path);
  CHECK(adj(1, 0) == -oracle::cofactor_det(PolyMatrix{{xa(0, 1), xa(0, 2)}, {xa(2, 1), xa(2, 2)}}));

  Rng rng(14);
  std::uniform_int_distribution<long> d(-2, 2);
  for (std::size_t n = 1; n <= 6; ++n) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    const MultiPoly chi = characteristic_polynomial(a);
    CHECK(chi == oracle::char_poly(a));
    const PolyMatrix minors = adjugate_char_matrix_minors(a), lev = adjugate_char_matrix_leverrier(a);
    CHECK(minors == lev);
    const PolyMatrix prod = oracle::x_minus(a) * minors;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(prod(i, j) == (i == j ? chi : MultiPoly()));
  }
}

TEST_CASE("real root counting") {
  const MultiPoly t = v(Var::t);
  CHECK(count_real_roots(t * t + MultiPoly(1L), Var::t) == 0);
  CHECK(count_real_roots(t * t - MultiPoly(2L), Var::t) == 2);
  CHECK(count_real_roots((t - MultiPoly(1L)).pow(3), Var::t) == 1);
  CHECK(count_real_roots(t.pow(4) * ratio(1, 16) + t * t * ratio(1, 2) + MultiPoly(1L), Var::t) == 0);
}

TEST_CASE("fingerprints") {
  const MultiPoly p = (v(Var::x) + v(Var::uu)).pow(3);
  const MultiPoly q = v(Var::x).pow(3) + v(Var::x).pow(2) * v(Var::uu) * Rational(3) +
                      v(Var::x) * v(Var::uu).pow(2) * Rational(3) + v(Var::uu).pow(3);
  CHECK(fingerprint(p, 5) == fingerprint(p, 5));
  CHECK(fingerprint(p, 5) == fingerprint(q, 5));
  CHECK(fingerprint(MultiPoly(ratio(1, 2)), 1) == modp::inv(2));

  const Digraph l = fig1a_left(), r = fig1a_right();
  Rng rng(15);
  const Point pt = {{Var::x, random_rational(rng, 9)},  {Var::tu, random_rational(rng, 9)},
                    {Var::td, random_rational(rng, 9)}, {Var::uu, random_rational(rng, 9)},
                    {Var::ud, random_rational(rng, 9)}};
  CHECK(eta(l).poly.eval(pt) == eta(r).poly.eval(pt));
}

TEST_CASE("fingerprint collisions on distinct random polynomials") {
  Rng rng(16);
  std::set<std::string> seen;
  std::set<std::pair<std::uint64_t, std::uint64_t>> prints;
  std::size_t distinct = 0;
  while (distinct < 10000) {
    const MultiPoly p = random_poly(rng, 3, 3);
    if (!seen.insert(p.to_string()).second) continue;
    ++distinct;
    prints.insert({fingerprint(p, 1), fingerprint(p, 2)});
  }
  CHECK(prints.size() == distinct);
}
