#include "zetaeq/zeta.hpp"

#include <map>
#include <stdexcept>

namespace zetaeq {

namespace {

MultiPoly v(Var var) { return MultiPoly::var(var); }

template <typename System>
auto& bump(System& s, Direction d, Direction d2) {
  if (d == Direction::up) return d2 == Direction::up ? s.b_uu : s.b_ud;
  return d2 == Direction::down ? s.b_dd : s.b_du;
}

Var bump_var(Direction d, Direction d2) {
  if (d == Direction::up) return d2 == Direction::up ? Var::tuu : Var::tud;
  return d2 == Direction::down ? Var::tdd : Var::tdu;
}

Var step_var(Direction d) { return d == Direction::up ? Var::uu : Var::ud; }

}  // namespace

BidirectionalEdgeSystem build_bidirectional(const WeightedDigraph& g) {
  BidirectionalEdgeSystem s;
  s.order = g.order();
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (!g.has_edge(i, j)) continue;
      const Rational& w = g.weight(i, j);
      if (i == j && w != 1 && w != -1) throw std::invalid_argument("loop weight must be +1 or -1");
      s.edges.push_back({i, j, Direction::up, w});
      s.edges.push_back({j, i, Direction::down, Rational(1) / w});
    }
  const std::size_t m2 = s.edges.size();
  s.c_up = s.c_down = s.b_uu = s.b_dd = s.b_ud = s.b_du = RationalMatrix(m2, m2);
  s.tail_incidence = IntMatrix(s.order, m2);
  for (std::size_t e = 0; e < m2; ++e) {
    const auto& edge = s.edges[e];
    s.tail_incidence(edge.tail, e) = 1;
    RationalMatrix& c = edge.dir == Direction::up ? s.c_up : s.c_down;
    for (std::size_t e2 = 0; e2 < m2; ++e2) {
      if (edge.head != s.edges[e2].tail) continue;
      c(e, e2) = edge.weight;
      if (s.reverse(e, e2)) bump(s, edge.dir, s.edges[e2].dir)(e, e2) = edge.weight;
    }
  }
  return s;
}

PolyMatrix BidirectionalEdgeSystem::transfer_matrix() const {
  const std::size_t m2 = size();
  PolyMatrix m(m2, m2);
  for (std::size_t e = 0; e < m2; ++e) {
    const Direction d = edges[e].dir;
    const RationalMatrix& c = d == Direction::up ? c_up : c_down;
    for (std::size_t e2 = 0; e2 < m2; ++e2) {
      if (c(e, e2) == 0) continue;
      MultiPoly entry(c(e, e2));
      for (Direction d2 : {Direction::up, Direction::down}) {
        const Rational& b = bump(*this, d, d2)(e, e2);
        if (b != 0) entry += (v(bump_var(d, d2)) - MultiPoly(1L)) * b;
      }
      m(e, e2) = entry * v(step_var(d));
    }
  }
  return m;
}

Point specialization_point(ZetaSpecialization spec) {
  const Rational one(1);
  const Rational zero(0);
  switch (spec) {
    case ZetaSpecialization::full:
      return {};
    case ZetaSpecialization::reversing:
      return {{Var::tuu, one}, {Var::tdd, one}};
    case ZetaSpecialization::outgoing:
      return {{Var::tdd, one}, {Var::tud, one}, {Var::tdu, one}, {Var::ud, zero}};
    case ZetaSpecialization::ihara:
      return {{Var::tuu, zero}, {Var::tdd, zero}, {Var::tud, zero}, {Var::tdu, zero}, {Var::ud, zero}};
  }
  throw std::invalid_argument("unknown specialization");
}

MultiPoly zeta_inverse(const WeightedDigraph& g, const Point& point) {
  BidirectionalEdgeSystem s = build_bidirectional(g);
  PolyMatrix m = s.transfer_matrix();
  PolyMatrix a = PolyMatrix::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) a(i, j) -= point.empty() ? m(i, j) : m(i, j).specialize(point);
  return det_fraction_free(a);
}

MultiPoly zeta_inverse(const WeightedDigraph& g, ZetaSpecialization spec) {
  return zeta_inverse(g, specialization_point(spec));
}

MultiPoly zeta_inverse(const Digraph& g, ZetaSpecialization spec) {
  return zeta_inverse(WeightedDigraph::unit_weights(g), spec);
}

namespace {

void require_reciprocal(const WeightedDigraph& g) {
  if (!g.has_reciprocal_weights()) throw std::invalid_argument("weights are not reciprocal");
}

// p^e for a possibly negative exponent, applied to `value` by exact division.
MultiPoly scale_by_power(const MultiPoly& value, const MultiPoly& p, long e) {
  if (e >= 0) return value * p.pow(static_cast<unsigned>(e));
  return value.divide_exact(p.pow(static_cast<unsigned>(-e)));
}

}  // namespace

MultiPoly zeta_closed_form_reversing(const WeightedDigraph& g) {
  require_reciprocal(g);
  const std::size_t n = g.order();
  const WeightedViews views = weighted_views(g);
  const Digraph support(views.a);
  const MultiPoly su = v(Var::su), sd = v(Var::sd), uu = v(Var::uu), ud = v(Var::ud);
  const MultiPoly z = MultiPoly(1L) - su * sd;
  PolyMatrix m = scaled(z, IntMatrix::identity(n));
  m -= scaled(uu, views.w);
  m -= scaled(ud, views.w_star);
  m -= scaled(su * ud, support.out_degree_matrix());
  m -= scaled(sd * uu, support.in_degree_matrix());
  MultiPoly result = scale_by_power(det_fraction_free(m), z, g.edge_count() - static_cast<long>(n));
  result = result.substitute(Var::su, uu * (v(Var::tud) - MultiPoly(1L)));
  return result.substitute(Var::sd, ud * (v(Var::tdu) - MultiPoly(1L)));
}

MultiPoly zeta_closed_form_outgoing(const WeightedDigraph& g) {
  require_reciprocal(g);
  const std::size_t n = g.order();
  const WeightedViews views = weighted_views(g);
  const auto [loops_plus, loops_minus] = signed_loop_counts(g);
  const MultiPoly s = v(Var::su), uu = v(Var::uu), ud = v(Var::ud);
  const MultiPoly one(1L);
  const MultiPoly z = one - s * s;
  PolyMatrix m = scaled(z, IntMatrix::identity(n));
  m -= scaled(z * uu, views.w);
  m -= scaled(z * ud, views.w_star);
  m -= scaled(s * uu, views.d_sym);
  m -= scaled(s * s * uu, views.w_sym);
  MultiPoly result = det_fraction_free(m) * (one - s).pow(static_cast<unsigned>(loops_plus)) *
                     (one + s).pow(static_cast<unsigned>(loops_minus));
  result = scale_by_power(result, z, views.reverse_pairs - static_cast<long>(n));
  return result.substitute(Var::su, uu * (v(Var::tuu) - one));
}

MultiPoly ihara_determinant(const Digraph& g) {
  if (!g.is_graph() || g.has_loops()) throw std::invalid_argument("expected a loop-free graph");
  const std::size_t n = g.order();
  const MultiPoly u = v(Var::uu);
  PolyMatrix m = PolyMatrix::identity(n);
  m -= scaled(u, g.adjacency());
  IntMatrix d_minus_i = g.out_degree_matrix();
  for (std::size_t i = 0; i < n; ++i) d_minus_i(i, i) -= 1;
  m += scaled(u * u, d_minus_i);
  return scale_by_power(det_fraction_free(m), MultiPoly(1L) - u * u, g.edge_count() / 2 - static_cast<long>(n));
}

namespace {

// Exponents of uu, ud, tuu, tdd, tud, tdu packed into one byte each.
constexpr Var kTallyVars[] = {Var::uu, Var::ud, Var::tuu, Var::tdd, Var::tud, Var::tdu};

std::size_t tally_slot(Var var) {
  for (std::size_t i = 0; i < 6; ++i)
    if (kTallyVars[i] == var) return i;
  throw std::logic_error("not a tally variable");
}

std::uint64_t bump_key(std::uint64_t key, Var var) { return key + (std::uint64_t{1} << (8 * tally_slot(var))); }

Monomial unpack(std::uint64_t key) {
  Monomial m;
  for (std::size_t i = 0; i < 6; ++i) m.exp[static_cast<std::size_t>(kTallyVars[i])] = (key >> (8 * i)) & 0xff;
  return m;
}

}  // namespace

WalkTally walk_series_oracle(const WeightedDigraph& g, std::size_t length) {
  if (length == 0 || length > 255) throw std::invalid_argument("walk length must be in [1, 255]");
  BidirectionalEdgeSystem s = build_bidirectional(g);
  const std::size_t m2 = s.size();
  std::vector<std::vector<std::size_t>> successors(m2);
  for (std::size_t e = 0; e < m2; ++e)
    for (std::size_t e2 = 0; e2 < m2; ++e2)
      if (s.edges[e].head == s.edges[e2].tail) successors[e].push_back(e2);

  std::vector<std::map<std::uint64_t, Rational>> totals(length + 1);
  for (std::size_t start = 0; start < m2; ++start) {
    // Walks e_1 = start, ..., e_k grouped by (e_k, exponents); the factor for the
    // pair (e_k, e_1) is added only when the walk closes.
    using Layer = std::vector<std::map<std::uint64_t, Rational>>;
    Layer layer(m2);
    layer[start][bump_key(0, step_var(s.edges[start].dir))] = s.edges[start].weight;
    for (std::size_t k = 1; k <= length; ++k) {
      for (std::size_t e = 0; e < m2; ++e) {
        if (layer[e].empty() || s.edges[e].head != s.edges[start].tail) continue;
        for (const auto& [key, w] : layer[e]) {
          std::uint64_t closed = key;
          if (s.reverse(e, start)) closed = bump_key(closed, bump_var(s.edges[e].dir, s.edges[start].dir));
          totals[k][closed] += w;
        }
      }
      if (k == length) break;
      Layer next(m2);
      for (std::size_t e = 0; e < m2; ++e) {
        for (const auto& [key, w] : layer[e]) {
          for (std::size_t e2 : successors[e]) {
            std::uint64_t k2 = bump_key(key, step_var(s.edges[e2].dir));
            if (s.reverse(e, e2)) k2 = bump_key(k2, bump_var(s.edges[e].dir, s.edges[e2].dir));
            next[e2][k2] += w * s.edges[e2].weight;
          }
        }
      }
      layer = std::move(next);
    }
  }
  WalkTally tally;
  tally.length = length;
  tally.by_length.resize(length + 1);
  for (std::size_t k = 1; k <= length; ++k) {
    std::vector<Term> terms;
    for (const auto& [key, w] : totals[k])
      if (w != 0) terms.emplace_back(unpack(key), w);
    tally.by_length[k] = MultiPoly::from_terms(std::move(terms));
  }
  return tally;
}

std::vector<MultiPoly> power_sums_from_determinant(const std::vector<MultiPoly>& c, std::size_t length) {
  auto coeff = [&](std::size_t j) { return j < c.size() ? c[j] : MultiPoly(); };
  std::vector<MultiPoly> p(length + 1);
  for (std::size_t k = 1; k <= length; ++k) {
    MultiPoly acc = coeff(k) * Rational(-static_cast<long>(k));
    for (std::size_t j = 1; j < k; ++j) acc -= coeff(j) * p[k - j];
    p[k] = std::move(acc);
  }
  return p;
}

}  // namespace zetaeq
