// Edge substitution: replacing every edge of a digraph by a copy of a small
// digraph with two distinguished vertices, and the characteristic polynomial
// of the result in terms of the original digraph.
#pragma once

#include <optional>
#include <vector>

#include "zetaeq/digraph.hpp"
#include "zetaeq/poly.hpp"

namespace zetaeq {

/// A digraph S with two native vertices t (identified with an edge's tail) and
/// h (identified with its head); the remaining vertices form the core C.
class Invader {
 public:
  Invader() = default;
  /// Throws std::invalid_argument unless t != h are vertices of `s`.
  Invader(Digraph s, std::size_t t, std::size_t h);

  const Digraph& graph() const { return s_; }
  std::size_t tail_native() const { return t_; }
  std::size_t head_native() const { return h_; }
  /// Core vertices of S in increasing order.
  const std::vector<std::size_t>& core_vertices() const { return core_; }
  std::size_t core_order() const { return core_.size(); }
  Digraph core() const { return s_.induced(core_); }

  long native(bool from_head, bool to_head) const;
  /// Edge counts from a native vertex into each core vertex.
  std::vector<long> to_core(bool from_head) const;
  /// Edge counts from each core vertex into a native vertex.
  std::vector<long> from_core(bool to_head) const;

 private:
  Digraph s_;
  std::size_t t_ = 0;
  std::size_t h_ = 1;
  std::vector<std::size_t> core_;
};

/// S with vertices 0..n-1, native t = 0 and h = n-1, edges i -> i+1.
Invader directed_path_invader(std::size_t n);
/// Same vertices, edges in both directions.
Invader undirected_path_invader(std::size_t n);

/// Natives first (the vertices of g), then one core block per edge of g in
/// the order of `Digraph::edges()`.
Digraph invade(const Invader& s, const Digraph& g);

/// chi_C and the four boundary polynomials p_{vv'} = A_{v->} adj(xI - A_C) A_{v'<-}.
struct InvasionPolynomials {
  MultiPoly chi_core;
  MultiPoly p_tt, p_th, p_ht, p_hh;
};

InvasionPolynomials invasion_polynomials(const Invader& s);

/// Characteristic polynomial of invade(s, g), from g's degree and adjacency matrices.
MultiPoly invasion_char_poly(const Invader& s, const Digraph& g);

/// An automorphism of S exchanging t and h, if any.
std::optional<Permutation> swap_automorphism(const Invader& s);
bool is_symmetric(const Invader& s);

/// One copy of S per undirected edge {v, v'} (v < v', v identified with t).
/// Throws std::invalid_argument for an asymmetric invader or a graph that is
/// directed or has loops.
Digraph symmetric_invade(const Invader& s, const Digraph& g);
MultiPoly symmetric_invasion_char_poly(const Invader& s, const Digraph& g);

/// Chebyshev polynomial of the second kind U_n in x; U_{-1} = 0.
/// Throws std::invalid_argument for n < -1.
MultiPoly chebyshev_U(int n);

/// x^{(nS-2)(m-n)} chi_G(x^{nS-1}).
MultiPoly directed_path_invasion_formula(std::size_t path_order, const Digraph& g);
/// U_{nS-2}(x/2)^{m-n} det(x U_{nS-2}(x/2) I - U_{nS-3}(x/2)(Dout + Din) - (A + A^T)).
MultiPoly undirected_path_invasion_formula(std::size_t path_order, const Digraph& g);
/// U_{nS-2}(x/2)^{m/2-n} det(x U_{nS-2}(x/2) I - U_{nS-3}(x/2) D - A) for a loop-free graph.
MultiPoly subdivision_formula(std::size_t path_order, const Digraph& g);

}  // namespace zetaeq
