#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "zetaeq/charpoly.hpp"
#include "zetaeq/figures.hpp"
#include "zetaeq/identities.hpp"
#include "zetaeq/switching.hpp"

using namespace zetaeq;

namespace {

MultiPoly v(Var x) { return MultiPoly::var(x); }

RationalMatrix ones(std::size_t r, std::size_t c) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = 1;
  return m;
}

void add_undirected(Digraph& g, std::size_t a, std::size_t b) {
  g.set_multiplicity(a, b, 1);
  g.set_multiplicity(b, a, 1);
}

// C4 on 0..3 plus an apex 4 joined to the given cycle vertices.
Digraph c4_with_apex(std::initializer_list<std::size_t> joined) {
  Digraph g(5);
  for (std::size_t i = 0; i < 4; ++i) add_undirected(g, i, (i + 1) % 4);
  for (auto w : joined) add_undirected(g, 4, w);
  return g;
}

SwitchingPartition w_only(std::vector<std::size_t> w, std::vector<std::size_t> x) {
  SwitchingPartition p;
  p.w_blocks = {std::move(w)};
  p.x = std::move(x);
  return p;
}

struct Instance {
  Digraph g;
  SwitchingPartition p;
};

// A regular W block, X vertices each joined to none, all or a random half of W.
Instance random_gm_star(Rng& rng) {
  const std::size_t w = rng() % 2 == 0 ? 2 : 4, nx = 1 + rng() % 3, n = w + nx;
  Digraph g(n);
  const int shape = static_cast<int>(rng() % 3);
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = i + 1; j < w; ++j)
      if (shape == 1 || (shape == 2 && (j == i + 1 || (i == 0 && j == w - 1)))) add_undirected(g, i, j);
  for (std::size_t a = w; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng() % 2) add_undirected(g, a, b);
    std::vector<std::size_t> order(w);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t links = std::vector<std::size_t>{0, w / 2, w}[rng() % 3];
    for (std::size_t k = 0; k < links; ++k) add_undirected(g, a, order[k]);
  }
  SwitchingPartition p;
  p.w_blocks.emplace_back(w);
  std::iota(p.w_blocks[0].begin(), p.w_blocks[0].end(), 0);
  for (std::size_t a = w; a < n; ++a) p.x.push_back(a);
  return {g, p};
}

// Fig. 1(b) with its partition carried along a random relabeling.
Instance relabeled_fig1b(Rng& rng) {
  std::vector<std::size_t> img(9);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  const SwitchingPartition base = fig1b_partition();
  SwitchingPartition p;
  auto map = [&](const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    for (auto u : b) out.push_back(img[u]);
    return out;
  };
  for (const auto& b : base.v_blocks) p.v_blocks.push_back(map(b));
  for (const auto& b : base.v_prime_blocks) p.v_prime_blocks.push_back(map(b));
  p.x = map(base.x);
  for (const auto& [a, b] : base.phi) p.phi[img[a]] = img[b];
  return {fig1b_left().relabel(Permutation(img)), p};
}

bool equal_x_degrees_on_w(const Instance& in) {
  for (const auto& block : in.p.w_blocks) {
    std::set<long> counts;
    for (auto w : block) {
      long c = 0;
      for (auto x : in.p.x) c += in.g.multiplicity(w, x);
      counts.insert(c);
    }
    if (counts.size() > 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("conjugator blocks") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const RationalMatrix q = q_block(n), rs = r_sym_block(n);
    for (std::size_t n2 = 1; n2 <= 6; ++n2) {
      CHECK(q * ones(n, n2) == ones(n, n2));
      CHECK(ones(n, n2) * q_block(n2) == ones(n, n2));
    }
    CHECK(rs * ones(n, n) == RationalMatrix(n, n));
    CHECK(ones(n, n) * rs == RationalMatrix(n, n));
    CHECK(q * q == RationalMatrix::identity(n));
    CHECK(q_block(2 * n) * r_block(n) == Rational(-1) * r_block(n));
  }
}

TEST_CASE("the Fig. 1(b) partition") {
  const ValidationReport r = validate_partition(fig1b_left(), fig1b_partition());
  CHECK_MESSAGE(r.valid(), r.summary());
  const Digraph switched = perform_switching(fig1b_left(), fig1b_partition());
  CHECK(is_isomorphic(switched, fig1b_right(), 9));
  CHECK(switched.is_graph());
  CHECK(perform_switching(switched, fig1b_partition()) == fig1b_left());
  const Certificate cert = certify(fig1b_left(), switched, build_conjugators(fig1b_left(), fig1b_partition()), true);
  CHECK_MESSAGE(cert.passed(), cert.summary());
  CHECK(count_real_roots(cert.det_conjugator, Var::t) == 0);
  CHECK(!cert.det_conjugator.is_zero());
}

TEST_CASE("a partition whose phi is not an isomorphism is reported") {
  SwitchingPartition p = fig1b_partition();
  p.phi = {{0, 3}, {1, 2}, {4, 7}, {5, 6}};
  const ValidationReport r = validate_partition(fig1b_left(), p);
  CHECK(!r.valid());
  CHECK(!r.summary().empty());
  CHECK_THROWS_AS(perform_switching(fig1b_left(), p), std::invalid_argument);
  p.phi = {{0, 3}, {1, 4}, {4, 7}, {5, 8}};
  CHECK_THROWS_AS(validate_partition(fig1b_left(), p), std::invalid_argument);
}

TEST_CASE("malformed partitions") {
  SwitchingPartition p = fig1b_partition();
  p.x.clear();
  CHECK_THROWS_AS(validate_partition(fig1b_left(), p), std::invalid_argument);
  p = fig1b_partition();
  p.x.push_back(0);
  CHECK_THROWS_AS(validate_partition(fig1b_left(), p), std::invalid_argument);
  Digraph multi = fig1b_left();
  multi.set_multiplicity(0, 1, 2);
  CHECK_THROWS_AS(validate_partition(multi, fig1b_partition()), std::invalid_argument);
}

TEST_CASE("GM* switching") {
  // one apex half-linked to C4 breaks the equal X-degree condition on W
  const SwitchingPartition single = w_only({0, 1, 2, 3}, {4});
  const ValidationReport bad = validate_partition(c4_with_apex({0, 1}), single);
  CHECK(!bad.valid());
  CHECK(bad.summary().find("(5)") != std::string::npos);
  CHECK(!validate_partition(c4_with_apex({0, 1, 2}), single).valid());

  Digraph g(6);
  for (std::size_t i = 0; i < 4; ++i) add_undirected(g, i, (i + 1) % 4);
  add_undirected(g, 4, 0);
  add_undirected(g, 4, 1);
  add_undirected(g, 5, 2);
  add_undirected(g, 5, 3);
  const SwitchingPartition p = w_only({0, 1, 2, 3}, {4, 5});
  const ValidationReport r = validate_partition(g, p);
  CHECK_MESSAGE(r.valid(), r.summary());
  const ConjugatorPair pair = build_conjugators(g, p);
  CHECK(pair.r == RationalMatrix(6, 6));
  const Digraph switched = perform_switching(g, p);
  for (std::size_t w = 0; w < 4; ++w) {
    CHECK(switched.multiplicity(4, w) == (w >= 2));
    CHECK(switched.multiplicity(5, w) == (w < 2));
  }
  CHECK(to_rational(switched.adjacency()) == pair.q * to_rational(g.adjacency()) * pair.q);
  CHECK(to_rational(switched.out_degree_matrix()) * pair.q == pair.q * to_rational(g.out_degree_matrix()));
  const Certificate cert = certify(g, switched, pair, true);
  CHECK_MESSAGE(cert.passed(), cert.summary());
}

TEST_CASE("no half-linked vertices leaves the digraph unchanged") {
  for (const Digraph& g : {c4_with_apex({}), c4_with_apex({0, 1, 2, 3})}) {
    const SwitchingPartition p = w_only({0, 1, 2, 3}, {4});
    REQUIRE(validate_partition(g, p).valid());
    CHECK(perform_switching(g, p) == g);
  }
}

TEST_CASE("random valid partitions") {
  Rng rng(61);
  for (int k = 0, rejected = 0; k < 30;) {
    const Instance in = k % 15 == 0 ? relabeled_fig1b(rng) : random_gm_star(rng);
    const ValidationReport r = validate_partition(in.g, in.p);
    if (!equal_x_degrees_on_w(in)) {
      CHECK(!r.valid());
      REQUIRE(++rejected < 1000);
      continue;
    }
    ++k;
    REQUIRE_MESSAGE(r.valid(), r.summary());
    const Digraph switched = perform_switching(in.g, in.p);
    CHECK(switched.is_simple());
    const ConjugatorPair pair = build_conjugators(in.g, in.p);
    CHECK(to_rational(switched.adjacency()) == pair.q * to_rational(in.g.adjacency()) * pair.q);
    CHECK(eta_complete(switched) == eta_complete(in.g));
    CHECK(eta(complement(switched)).poly == eta(complement(in.g)).poly);
    CHECK(perform_switching(switched, in.p) == in.g);
    const Certificate cert = certify(in.g, switched, pair);
    CHECK_MESSAGE(cert.passed(), cert.summary());
  }
}

TEST_CASE("the Fig. 1(a) conjugator") {
  const MultiPoly tu = v(Var::tu), td = v(Var::td), uu = v(Var::uu), ud = v(Var::ud), z;
  const PolyMatrix m = {{uu * uu - td * ud, uu * ud, z, z, z},
                        {ud * ud, uu * uu + td * ud, ud * ud, uu * ud, z},
                        {z, ud * ud, uu * ud, uu * uu, z},
                        {z, uu * ud, uu * uu, ud * ud + tu * uu, uu * uu},
                        {z, z, z, uu * ud, ud * ud - uu * tu}};
  CHECK(fig1a_conjugator() == m);
  const PolyMatrix lg = oracle::laplacian_matrix(fig1a_left()), lg2 = oracle::laplacian_matrix(fig1a_right());
  CHECK(m * lg == lg2 * m);
  const MultiPoly two(2L);
  const MultiPoly det = (uu.pow(5) - two * uu.pow(2) * ud.pow(3) - td.pow(2) * uu * ud.pow(2) + td * ud.pow(4)) *
                        (ud.pow(5) - two * ud.pow(2) * uu.pow(3) - tu.pow(2) * ud * uu.pow(2) + tu * uu.pow(4));
  CHECK(oracle::cofactor_det(m) == det);
  CHECK(det.specialize({{Var::tu, Rational(0)}, {Var::td, Rational(0)}, {Var::ud, Rational(0)}}).is_zero());
  const Certificate cert = verify_fig1a_conjugator();
  CHECK_MESSAGE(cert.passed(), cert.summary());
}
