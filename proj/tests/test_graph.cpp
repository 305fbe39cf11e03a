#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "zetaeq/figures.hpp"
#include "zetaeq/identities.hpp"
#include "zetaeq/io.hpp"

using namespace zetaeq;

namespace {

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

IntMatrix diag(std::vector<long> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("building digraphs") {
  const std::vector<Edge> edges = {{0, 1}, {2, 1}, {1, 3}, {3, 2}, {3, 4}};
  CHECK(Digraph::from_edges(5, edges) == fig1a_left());
  const std::vector<Edge> right = {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}};
  CHECK(Digraph::from_edges(5, right) == fig1a_right());
  CHECK(Digraph(1).adjacency() == IntMatrix{{0}});
  const std::vector<Edge> bad = {{0, 5}};
  CHECK_THROWS_AS(Digraph::from_edges(2, bad), std::out_of_range);
  CHECK_THROWS_AS(Digraph(IntMatrix{{0, -1}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("degree matrices") {
  const DegreeMatrices d = degree_matrices(fig1a_left());
  CHECK(d.out == diag({1, 1, 1, 2, 0}));
  CHECK(d.in == diag({0, 2, 1, 1, 1}));
  Digraph loop(1);
  loop.add_edge(0, 0);
  CHECK(degree_matrices(loop).out == IntMatrix{{1}});
  CHECK(degree_matrices(loop).in == IntMatrix{{1}});
  Digraph k2(2);
  k2.add_edge(0, 1);
  k2.add_edge(1, 0);
  CHECK(degree_matrices(k2).out == diag({1, 1}));
  CHECK(degree_matrices(k2).in == diag({1, 1}));

  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const Digraph g = random_multidigraph(rng, 4, 2, true);
    long tr_out = 0, tr_in = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      tr_out += g.out_degree_matrix()(i, i);
      tr_in += g.in_degree_matrix()(i, i);
    }
    CHECK(tr_out == g.edge_count());
    CHECK(tr_in == g.edge_count());
    const Digraph h = random_graph(rng, 5, 0.5, false);
    CHECK(h.is_graph());
    CHECK(h.out_degree_matrix() == h.in_degree_matrix());
  }
}

TEST_CASE("complement") {
  const Digraph c = complement(Digraph(3));
  CHECK(c.edge_count() == 6);
  CHECK(!c.has_loops());
  CHECK(complement(fig1a_left()).edge_count() == 15);
  Rng rng(22);
  for (int k = 0; k < 30; ++k) {
    const Digraph g = random_simple_digraph(rng, 5, 0.4);
    CHECK(complement(complement(g)) == g);
    const Permutation p = random_permutation(rng, 5);
    CHECK(complement(g.relabel(p)) == complement(g).relabel(p));
  }
  Digraph multi(2);
  multi.add_edge(0, 1, 2);
  CHECK_THROWS_AS(complement(multi), std::invalid_argument);
}

TEST_CASE("canonical forms and isomorphism") {
  Rng rng(23);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 7;
    const Digraph g = random_multidigraph(rng, n, 2, true);
    const Permutation p = random_permutation(rng, n);
    const Digraph h = g.relabel(p);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(oracle::brute_isomorphic(g, canonical_form(g)));
    CHECK(is_canonical(canonical_form(g)));
    const auto witness = find_isomorphism(g, h);
    REQUIRE(witness.has_value());
    CHECK(g.relabel(*witness) == h);
    const CanonicalLabeling cl = canonical_labeling(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(cl.form.multiplicity(i, j) == g.multiplicity(cl.order(i), cl.order(j)));
  }
  CHECK(!is_isomorphic(fig1a_left(), fig1a_right()));
  CHECK(!is_isomorphic(fig1b_left(), fig1b_right(), 9));
  Digraph cycle(3), path(3);
  for (std::size_t i = 0; i < 3; ++i) cycle.add_edge(i, (i + 1) % 3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(!is_isomorphic(cycle, path));
  CHECK_THROWS(canonical_form(Digraph(9)));
}

TEST_CASE("canonical forms agree with brute-force isomorphism on random pairs") {
  Rng rng(24);
  for (int k = 0; k < 200; ++k) {
    const Digraph g = random_simple_digraph(rng, 4, 0.4), h = random_simple_digraph(rng, 4, 0.4);
    CHECK((canonical_form(g) == canonical_form(h)) == oracle::brute_isomorphic(g, h));
  }
}

TEST_CASE("weak connectivity") {
  Rng rng(25);
  for (int k = 0; k < 100; ++k) {
    const Digraph g = random_simple_digraph(rng, 5, 0.2);
    CHECK(g.is_weakly_connected() == oracle::weakly_connected(g));
  }
}

TEST_CASE("weighted views") {
  WeightedDigraph loop(1);
  loop.set_weight(0, 0, 1);
  WeightedViews v = weighted_views(loop);
  CHECK(v.w_star == RationalMatrix{{1}});
  CHECK(v.loops_plus == 1);
  CHECK(v.loops_minus == 0);
  CHECK(v.reverse_pairs == 0);

  WeightedDigraph two(2);
  two.set_weight(0, 1, 2);
  two.set_weight(1, 0, ratio(1, 2));
  v = weighted_views(two);
  CHECK(v.w_star == v.w);
  CHECK(v.a_sym == IntMatrix{{0, 1}, {1, 0}});
  CHECK(v.reverse_pairs == 1);
  CHECK(two.has_reciprocal_weights());

  WeightedDigraph path(3);
  path.set_weight(0, 1, 3);
  path.set_weight(1, 2, ratio(-1, 2));
  v = weighted_views(path);
  CHECK(v.a_sym.is_zero());
  CHECK(v.reverse_pairs == 0);
  CHECK(v.w_star(1, 0) == ratio(1, 3));

  WeightedDigraph bad(1);
  bad.set_weight(0, 0, 2);
  CHECK_THROWS_AS(signed_loop_counts(bad), std::invalid_argument);
  CHECK_THROWS_AS(bad.set_weight(0, 0, 0), std::invalid_argument);
}

TEST_CASE("edge-list parsing") {
  const EdgeListFile f = parse_edge_list("# comment\nn 3\n1 2\n1 2  # parallel\n3 3\n");
  CHECK(f.graph.order() == 3);
  CHECK(f.graph.multiplicity(0, 1) == 2);
  CHECK(f.graph.multiplicity(2, 2) == 1);
  CHECK(!f.weighted);

  const EdgeListFile w = parse_edge_list("n 2\nweighted\n1 2 4/6\n2 1 -3\n");
  REQUIRE(w.weighted);
  CHECK(w.weighted->weight(0, 1) == ratio(2, 3));
  CHECK(w.weighted->weight(0, 1).get_den() == 3);
  CHECK(w.weighted->weight(1, 0) == -3);

  CHECK_THROWS_AS(parse_edge_list("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n1 2 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\nweighted\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\nweighted\n1 2 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\nweighted\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  try {
    parse_edge_list("n 2\n\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("formatting round-trips") {
  Rng rng(26);
  for (int k = 0; k < 30; ++k) {
    const Digraph g = random_multidigraph(rng, 4, 2, true);
    CHECK(parse_edge_list(format_edge_list(g)).graph == g);
    const WeightedDigraph w = random_reciprocal_digraph(rng, 4, 6);
    CHECK(parse_edge_list(format_edge_list(w)).weighted->weights() == w.weights());
  }
  const Invader s = parse_invader("n 3\nnative 1 3\n1 2\n2 3\n");
  CHECK(s.tail_native() == 0);
  CHECK(s.head_native() == 2);
  CHECK(parse_invader(format_invader(s)).graph() == s.graph());
  CHECK_THROWS_AS(parse_invader("n 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_invader("n 2\nnative 1 1\n"), ParseError);
}

TEST_CASE("partition parsing") {
  const SwitchingPartition p = parse_partition("V1: 1 2\nV1': 3 4\nW1: 5 6\nX: 7\n");
  CHECK(p.v_blocks == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(p.v_prime_blocks == std::vector<std::vector<std::size_t>>{{2, 3}});
  CHECK(p.w_blocks.size() == 1);
  CHECK(p.x == std::vector<std::size_t>{6});
  CHECK(p.phi.at(0) == 2);
  CHECK(p.phi.at(1) == 3);
  const SwitchingPartition q = parse_partition(format_partition(fig1b_partition()));
  CHECK(q.v_blocks == fig1b_partition().v_blocks);
  CHECK(q.phi == fig1b_partition().phi);
  CHECK_THROWS_AS(parse_partition("V1: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("Y: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("V2: 1\nV2': 2\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("V1: 1\nV1': 2\nphi: 1-2\n"), ParseError);
}
