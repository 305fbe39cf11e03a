// Edge zeta functions: the bidirectional edge system of a weighted digraph,
// det(I - M(t, u)), its closed forms and a closed-walk oracle.
#pragma once

#include <cstdint>
#include <vector>

#include "zetaeq/digraph.hpp"
#include "zetaeq/matrix.hpp"
#include "zetaeq/poly.hpp"

namespace zetaeq {

enum class Direction : std::uint8_t { up, down };

struct BidirectionalEdge {
  std::size_t tail;
  std::size_t head;
  Direction dir;
  Rational weight;
};

/// The 2m edges of a weighted digraph together with their added reverses.
/// Edge 2k is the k-th original edge (row-major order), edge 2k+1 its added reverse.
struct BidirectionalEdgeSystem {
  std::size_t order = 0;
  std::vector<BidirectionalEdge> edges;
  RationalMatrix c_up, c_down;
  RationalMatrix b_uu, b_dd, b_ud, b_du;
  IntMatrix tail_incidence;

  std::size_t size() const { return edges.size(); }
  /// e' is reverse to e: t(e') = h(e) and h(e') = t(e).
  bool reverse(std::size_t e, std::size_t e2) const {
    return edges[e2].tail == edges[e].head && edges[e2].head == edges[e].tail;
  }
  /// M(t, u) over the variables tuu, tdd, tud, tdu, uu, ud.
  PolyMatrix transfer_matrix() const;
};

/// Throws std::invalid_argument for a loop whose weight is not +-1.
BidirectionalEdgeSystem build_bidirectional(const WeightedDigraph& g);

enum class ZetaSpecialization : std::uint8_t {
  full,       // all six variables
  reversing,  // tuu = tdd = 1
  outgoing,   // tdd = tud = tdu = 1, ud = 0
  ihara,      // every bump variable 0, ud = 0
};

/// Values assigned by a specialization.
Point specialization_point(ZetaSpecialization spec);

/// det(I - M(t, u)); the specialization is applied to M before the determinant.
MultiPoly zeta_inverse(const WeightedDigraph& g, ZetaSpecialization spec = ZetaSpecialization::full);
MultiPoly zeta_inverse(const Digraph& g, ZetaSpecialization spec = ZetaSpecialization::full);
/// det(I - M) with the variables in `point` fixed before the determinant.
MultiPoly zeta_inverse(const WeightedDigraph& g, const Point& point);

/// Closed form for det(I - M) at tuu = tdd = 1. Throws std::invalid_argument
/// unless weights are reciprocal.
MultiPoly zeta_closed_form_reversing(const WeightedDigraph& g);
/// Closed form for det(I - M) at tdd = tud = tdu = 1 (uu, ud, tuu free).
/// Throws std::invalid_argument unless weights are reciprocal.
MultiPoly zeta_closed_form_outgoing(const WeightedDigraph& g);

/// (1 - uu^2)^(m - n) det(I - uu A + uu^2 (D - I)) for a loop-free graph with m undirected edges.
MultiPoly ihara_determinant(const Digraph& g);

/// Closed-walk sums in the bidirectional digraph: entry k (1 <= k <= length)
/// is the sum over closed edge sequences of length k, each counted once per
/// starting edge, of weight * bump variables * direction variables.
struct WalkTally {
  std::size_t length = 0;
  std::vector<MultiPoly> by_length;  // index 0 unused
};

WalkTally walk_series_oracle(const WeightedDigraph& g, std::size_t length);

/// Power sums p_1..p_L from the coefficients of det(I - s M) = sum_j c_j s^j
/// (Newton's identities), i.e. the coefficients of -log det(I - s M) times k.
std::vector<MultiPoly> power_sums_from_determinant(const std::vector<MultiPoly>& c, std::size_t length);

}  // namespace zetaeq
