#include "zetaeq/invasion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zetaeq/matrix.hpp"

namespace zetaeq {

Invader::Invader(Digraph s, std::size_t t, std::size_t h) : s_(std::move(s)), t_(t), h_(h) {
  if (t_ >= s_.order() || h_ >= s_.order() || t_ == h_)
    throw std::invalid_argument("native vertices must be two distinct vertices of the invader");
  for (std::size_t v = 0; v < s_.order(); ++v)
    if (v != t_ && v != h_) core_.push_back(v);
}

long Invader::native(bool from_head, bool to_head) const {
  return s_.multiplicity(from_head ? h_ : t_, to_head ? h_ : t_);
}

std::vector<long> Invader::to_core(bool from_head) const {
  std::vector<long> row;
  for (auto c : core_) row.push_back(s_.multiplicity(from_head ? h_ : t_, c));
  return row;
}

std::vector<long> Invader::from_core(bool to_head) const {
  std::vector<long> col;
  for (auto c : core_) col.push_back(s_.multiplicity(c, to_head ? h_ : t_));
  return col;
}

Invader directed_path_invader(std::size_t n) {
  if (n < 2) throw std::invalid_argument("an invader needs at least two vertices");
  Digraph s(n);
  for (std::size_t i = 0; i + 1 < n; ++i) s.add_edge(i, i + 1);
  return {std::move(s), 0, n - 1};
}

Invader undirected_path_invader(std::size_t n) {
  if (n < 2) throw std::invalid_argument("an invader needs at least two vertices");
  Digraph s(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s.add_edge(i, i + 1);
    s.add_edge(i + 1, i);
  }
  return {std::move(s), 0, n - 1};
}

namespace {

// Glues a copy of S onto natives (v, v2) with its core at `offset`.
void attach_copy(const Invader& s, IntMatrix& a, std::size_t v, std::size_t v2, std::size_t offset) {
  const auto& core = s.core_vertices();
  const Digraph& g = s.graph();
  const std::size_t natives[2] = {v, v2};
  for (int from = 0; from < 2; ++from)
    for (int to = 0; to < 2; ++to) a(natives[from], natives[to]) += s.native(from == 1, to == 1);
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = 0; j < core.size(); ++j) a(offset + i, offset + j) += g.multiplicity(core[i], core[j]);
    for (int side = 0; side < 2; ++side) {
      const std::size_t native = side == 0 ? s.tail_native() : s.head_native();
      a(natives[side], offset + i) += g.multiplicity(native, core[i]);
      a(offset + i, natives[side]) += g.multiplicity(core[i], native);
    }
  }
}

MultiPoly x_poly() { return MultiPoly::var(Var::x); }

MultiPoly times_power(const MultiPoly& value, const MultiPoly& p, long e) {
  if (e >= 0) return value * p.pow(static_cast<unsigned>(e));
  return value.divide_exact(p.pow(static_cast<unsigned>(-e)));
}

void require_loop_free_graph(const Digraph& g) {
  if (!g.is_graph() || g.has_loops()) throw std::invalid_argument("expected a loop-free graph");
}

}  // namespace

Digraph invade(const Invader& s, const Digraph& g) {
  const std::size_t nc = s.core_order();
  const auto edges = g.edges();
  IntMatrix a(g.order() + edges.size() * nc, g.order() + edges.size() * nc);
  for (std::size_t i = 0; i < edges.size(); ++i) attach_copy(s, a, edges[i].tail, edges[i].head, g.order() + i * nc);
  return Digraph(std::move(a));
}

InvasionPolynomials invasion_polynomials(const Invader& s) {
  InvasionPolynomials p;
  const std::size_t nc = s.core_order();
  if (nc == 0) {
    p.chi_core = MultiPoly(1L);
    return p;
  }
  const IntMatrix a_core = s.core().adjacency();
  p.chi_core = characteristic_polynomial(a_core);
  const PolyMatrix adj = adjugate_char_matrix(a_core);
  auto form = [&](bool from_head, bool to_head) {
    const auto row = s.to_core(from_head);
    const auto col = s.from_core(to_head);
    MultiPoly sum;
    for (std::size_t j = 0; j < nc; ++j) {
      if (row[j] == 0) continue;
      for (std::size_t k = 0; k < nc; ++k)
        if (col[k] != 0) sum += adj(j, k) * Rational(row[j] * col[k]);
    }
    return sum;
  };
  p.p_tt = form(false, false);
  p.p_th = form(false, true);
  p.p_ht = form(true, false);
  p.p_hh = form(true, true);
  return p;
}

MultiPoly invasion_char_poly(const Invader& s, const Digraph& g) {
  const InvasionPolynomials p = invasion_polynomials(s);
  const MultiPoly& chi = p.chi_core;
  const auto coeff = [&](bool from_head, bool to_head, const MultiPoly& pv) {
    return chi * Rational(s.native(from_head, to_head)) + pv;
  };
  const IntMatrix& a = g.adjacency();
  PolyMatrix m = scaled(x_poly() * chi, IntMatrix::identity(g.order()));
  m -= scaled(coeff(false, false, p.p_tt), g.out_degree_matrix());
  m -= scaled(coeff(true, true, p.p_hh), g.in_degree_matrix());
  m -= scaled(coeff(false, true, p.p_th), a);
  m -= scaled(coeff(true, false, p.p_ht), a.transpose());
  return times_power(det_fraction_free(m), chi, g.edge_count() - static_cast<long>(g.order()));
}

std::optional<Permutation> swap_automorphism(const Invader& s) {
  const Digraph& g = s.graph();
  const auto& core = s.core_vertices();
  std::vector<std::size_t> images = core;
  std::sort(images.begin(), images.end());
  do {
    std::vector<std::size_t> p(g.order());
    p[s.tail_native()] = s.head_native();
    p[s.head_native()] = s.tail_native();
    for (std::size_t i = 0; i < core.size(); ++i) p[core[i]] = images[i];
    Permutation perm(std::move(p));
    if (g.relabel(perm) == g) return perm;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

bool is_symmetric(const Invader& s) { return swap_automorphism(s).has_value(); }

Digraph symmetric_invade(const Invader& s, const Digraph& g) {
  if (!is_symmetric(s)) throw std::invalid_argument("invader has no automorphism swapping its natives");
  require_loop_free_graph(g);
  const std::size_t nc = s.core_order();
  std::vector<Edge> undirected;
  for (std::size_t v = 0; v < g.order(); ++v)
    for (std::size_t w = v + 1; w < g.order(); ++w)
      for (long k = 0; k < g.multiplicity(v, w); ++k) undirected.push_back({v, w});
  IntMatrix a(g.order() + undirected.size() * nc, g.order() + undirected.size() * nc);
  for (std::size_t i = 0; i < undirected.size(); ++i)
    attach_copy(s, a, undirected[i].tail, undirected[i].head, g.order() + i * nc);
  return Digraph(std::move(a));
}

MultiPoly symmetric_invasion_char_poly(const Invader& s, const Digraph& g) {
  if (!is_symmetric(s)) throw std::invalid_argument("invader has no automorphism swapping its natives");
  require_loop_free_graph(g);
  const InvasionPolynomials p = invasion_polynomials(s);
  const MultiPoly& chi = p.chi_core;
  PolyMatrix m = scaled(x_poly() * chi, IntMatrix::identity(g.order()));
  m -= scaled(chi * Rational(s.native(false, false)) + p.p_tt, g.out_degree_matrix());
  m -= scaled(chi * Rational(s.native(false, true)) + p.p_th, g.adjacency());
  return times_power(det_fraction_free(m), chi, g.edge_count() / 2 - static_cast<long>(g.order()));
}

MultiPoly chebyshev_U(int n) {
  if (n < -1) throw std::invalid_argument("Chebyshev index must be at least -1");
  MultiPoly prev;           // U_{-1}
  MultiPoly cur(1L);        // U_0
  if (n == -1) return prev;
  const MultiPoly two_x = x_poly() * Rational(2);
  for (int k = 0; k < n; ++k) {
    MultiPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MultiPoly directed_path_invasion_formula(std::size_t path_order, const Digraph& g) {
  if (path_order < 2) throw std::invalid_argument("path invader needs at least two vertices");
  const MultiPoly chi = characteristic_polynomial(g.adjacency());
  const MultiPoly stretched = chi.substitute(Var::x, x_poly().pow(static_cast<unsigned>(path_order - 1)));
  const long e = static_cast<long>(path_order - 2) * (g.edge_count() - static_cast<long>(g.order()));
  return times_power(stretched, x_poly(), e);
}

namespace {

MultiPoly half_chebyshev(int n) { return chebyshev_U(n).substitute(Var::x, x_poly() * ratio(1, 2)); }

}  // namespace

MultiPoly undirected_path_invasion_formula(std::size_t path_order, const Digraph& g) {
  if (path_order < 2) throw std::invalid_argument("path invader needs at least two vertices");
  const int k = static_cast<int>(path_order);
  const MultiPoly u2 = half_chebyshev(k - 2);
  const MultiPoly u3 = half_chebyshev(k - 3);
  const IntMatrix& a = g.adjacency();
  PolyMatrix m = scaled(x_poly() * u2, IntMatrix::identity(g.order()));
  m -= scaled(u3, g.out_degree_matrix() + g.in_degree_matrix());
  m -= to_poly(a + a.transpose());
  return times_power(det_fraction_free(m), u2, g.edge_count() - static_cast<long>(g.order()));
}

MultiPoly subdivision_formula(std::size_t path_order, const Digraph& g) {
  if (path_order < 2) throw std::invalid_argument("path invader needs at least two vertices");
  require_loop_free_graph(g);
  const int k = static_cast<int>(path_order);
  const MultiPoly u2 = half_chebyshev(k - 2);
  const MultiPoly u3 = half_chebyshev(k - 3);
  PolyMatrix m = scaled(x_poly() * u2, IntMatrix::identity(g.order()));
  m -= scaled(u3, g.out_degree_matrix());
  m -= to_poly(g.adjacency());
  return times_power(det_fraction_free(m), u2, g.edge_count() / 2 - static_cast<long>(g.order()));
}

}  // namespace zetaeq
