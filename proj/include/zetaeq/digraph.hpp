// Digraphs with edge multiplicities, weighted parallel-free digraphs, and
// brute-force canonical labelling for small orders.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zetaeq/matrix.hpp"

namespace zetaeq {

/// 0-based directed edge.
struct Edge {
  std::size_t tail;
  std::size_t head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A bijection on {0, ..., n-1}; `image(i)` is where vertex i goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Unweighted digraph stored as its matrix of edge multiplicities.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : adj_(n, n) {}
  /// Throws std::invalid_argument for a non-square matrix or a negative entry.
  explicit Digraph(IntMatrix adjacency);
  /// Throws std::out_of_range for an endpoint >= n.
  static Digraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.rows(); }
  long edge_count() const;
  long multiplicity(std::size_t i, std::size_t j) const { return adj_(i, j); }
  void add_edge(std::size_t tail, std::size_t head, long count = 1);
  void set_multiplicity(std::size_t tail, std::size_t head, long count);

  const IntMatrix& adjacency() const { return adj_; }
  std::vector<long> out_degrees() const;
  std::vector<long> in_degrees() const;
  IntMatrix out_degree_matrix() const;
  IntMatrix in_degree_matrix() const;

  /// Edges with multiplicity, in row-major order of the adjacency matrix.
  std::vector<Edge> edges() const;

  bool is_simple() const;
  /// Symmetric adjacency matrix.
  bool is_graph() const;
  bool has_loops() const;
  /// Connected after forgetting directions; the empty digraph counts as connected.
  bool is_weakly_connected() const;

  Digraph transpose() const { return Digraph(adj_.transpose()); }
  /// Relabels vertex v as p(v).
  Digraph relabel(const Permutation& p) const;
  /// Subdigraph induced by `vertices`, in the given order.
  Digraph induced(std::span<const std::size_t> vertices) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  IntMatrix adj_;
};

struct DegreeMatrices {
  IntMatrix out;
  IntMatrix in;
};

DegreeMatrices degree_matrices(const Digraph& g);

/// J - I - A; throws std::invalid_argument for a non-simple digraph.
Digraph complement(const Digraph& g);

inline constexpr std::size_t kDefaultCanonicalBound = 8;

/// `form(i, j) == g(order(i), order(j))`, where `order` maps canonical position to vertex.
struct CanonicalLabeling {
  Digraph form;
  Permutation order;
};

/// Canonical representative of the isomorphism class of `g`.
///
/// Vertices are first sorted by (loops, out-degree, in-degree); among the
/// orderings compatible with that sort the one whose adjacency key is
/// lexicographically smallest wins. The key lists, for k = 0, 1, ..., the
/// entry (k, k) followed by (j, k), (k, j) for j < k, so every prefix of the
/// key depends only on a prefix of the ordering.
CanonicalLabeling canonical_labeling(const Digraph& g, std::size_t max_order = kDefaultCanonicalBound);
Digraph canonical_form(const Digraph& g, std::size_t max_order = kDefaultCanonicalBound);
/// True when the identity ordering is canonical, i.e. `canonical_form(g) == g`.
bool is_canonical(const Digraph& g, std::size_t max_order = kDefaultCanonicalBound);

/// A permutation p with h == g.relabel(p), if one exists.
std::optional<Permutation> find_isomorphism(const Digraph& g, const Digraph& h,
                                            std::size_t max_order = kDefaultCanonicalBound);
bool is_isomorphic(const Digraph& g, const Digraph& h, std::size_t max_order = kDefaultCanonicalBound);

/// Parallel-free digraph with nonzero rational edge weights. A zero entry of
/// the weight matrix means "no edge".
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(std::size_t n) : w_(n, n) {}
  explicit WeightedDigraph(RationalMatrix weights);
  /// Every edge of `g` with weight one; throws for parallel edges.
  static WeightedDigraph unit_weights(const Digraph& g);

  std::size_t order() const { return w_.rows(); }
  long edge_count() const;
  bool has_edge(std::size_t i, std::size_t j) const { return sgn(w_(i, j)) != 0; }
  const Rational& weight(std::size_t i, std::size_t j) const { return w_(i, j); }
  /// Throws std::invalid_argument for a zero weight.
  void set_weight(std::size_t i, std::size_t j, const Rational& w);

  const RationalMatrix& weights() const { return w_; }
  IntMatrix support() const;
  Digraph unweighted() const { return Digraph(support()); }
  /// w(e') == 1 / w(e) whenever e' is reverse to e (includes loops: w = +-1).
  bool has_reciprocal_weights() const;

 private:
  RationalMatrix w_;
};

struct WeightedViews {
  RationalMatrix w;
  RationalMatrix w_star;  // transposed, reciprocal weights of the added reverse edges
  IntMatrix a;
  IntMatrix a_sym;
  RationalMatrix w_sym;
  IntMatrix d_sym;
  std::optional<long> loops_plus;   // absent when some loop weight is not +-1
  std::optional<long> loops_minus;
  long reverse_pairs;
};

WeightedViews weighted_views(const WeightedDigraph& g);
/// (l+, l-); throws std::invalid_argument if a loop weight is not +-1.
std::pair<long, long> signed_loop_counts(const WeightedDigraph& g);

}  // namespace zetaeq
