#include "zetaeq/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace zetaeq {

// Permutation ------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto i : images_) {
    if (i >= images_.size() || seen[i]) throw std::invalid_argument("not a permutation");
    seen[i] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a(b(i));
  return Permutation(std::move(c));
}

// Digraph --------------------------------------------------------------------

Digraph::Digraph(IntMatrix adjacency) : adj_(std::move(adjacency)) {
  if (!adj_.is_square()) throw std::invalid_argument("adjacency matrix must be square");
  for (std::size_t i = 0; i < adj_.rows(); ++i)
    for (std::size_t j = 0; j < adj_.cols(); ++j)
      if (adj_(i, j) < 0) throw std::invalid_argument("negative edge multiplicity");
}

Digraph Digraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Digraph g(n);
  for (const auto& e : edges) g.add_edge(e.tail, e.head);
  return g;
}

long Digraph::edge_count() const {
  long m = 0;
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) m += adj_(i, j);
  return m;
}

void Digraph::add_edge(std::size_t tail, std::size_t head, long count) {
  if (tail >= order() || head >= order()) throw std::out_of_range("edge endpoint out of range");
  if (adj_(tail, head) + count < 0) throw std::invalid_argument("negative edge multiplicity");
  adj_(tail, head) += count;
}

void Digraph::set_multiplicity(std::size_t tail, std::size_t head, long count) {
  if (tail >= order() || head >= order()) throw std::out_of_range("edge endpoint out of range");
  if (count < 0) throw std::invalid_argument("negative edge multiplicity");
  adj_(tail, head) = count;
}

std::vector<long> Digraph::out_degrees() const {
  std::vector<long> d(order(), 0);
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) d[i] += adj_(i, j);
  return d;
}

std::vector<long> Digraph::in_degrees() const {
  std::vector<long> d(order(), 0);
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) d[j] += adj_(i, j);
  return d;
}

namespace {

IntMatrix diagonal(const std::vector<long>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

IntMatrix Digraph::out_degree_matrix() const { return diagonal(out_degrees()); }
IntMatrix Digraph::in_degree_matrix() const { return diagonal(in_degrees()); }

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j)
      for (long k = 0; k < adj_(i, j); ++k) out.push_back({i, j});
  return out;
}

bool Digraph::is_simple() const {
  for (std::size_t i = 0; i < order(); ++i) {
    if (adj_(i, i) != 0) return false;
    for (std::size_t j = 0; j < order(); ++j)
      if (adj_(i, j) > 1) return false;
  }
  return true;
}

bool Digraph::is_graph() const { return adj_ == adj_.transpose(); }

bool Digraph::has_loops() const {
  for (std::size_t i = 0; i < order(); ++i)
    if (adj_(i, i) != 0) return true;
  return false;
}

bool Digraph::is_weakly_connected() const {
  const std::size_t n = order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (seen[w] || (adj_(v, w) == 0 && adj_(w, v) == 0)) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

Digraph Digraph::relabel(const Permutation& p) const {
  if (p.size() != order()) throw std::invalid_argument("permutation size mismatch");
  IntMatrix m(order(), order());
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) m(p(i), p(j)) = adj_(i, j);
  return Digraph(std::move(m));
}

Digraph Digraph::induced(std::span<const std::size_t> vertices) const {
  IntMatrix m(vertices.size(), vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) m(i, j) = adj_(vertices[i], vertices[j]);
  return Digraph(std::move(m));
}

DegreeMatrices degree_matrices(const Digraph& g) { return {g.out_degree_matrix(), g.in_degree_matrix()}; }

Digraph complement(const Digraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("complement requires a simple digraph");
  const std::size_t n = g.order();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j) ? 0 : 1 - g.multiplicity(i, j);
  return Digraph(std::move(m));
}

// Canonical labelling ---------------------------------------------------------------

namespace {

using VertexInvariant = std::tuple<long, long, long>;

std::vector<VertexInvariant> vertex_invariants(const Digraph& g) {
  auto out = g.out_degrees();
  auto in = g.in_degrees();
  std::vector<VertexInvariant> inv(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) inv[v] = {g.multiplicity(v, v), out[v], in[v]};
  return inv;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Digraph& g) : a_(g.adjacency()), n_(g.order()), inv_(vertex_invariants(g)) {
    sorted_ = inv_;
    std::sort(sorted_.begin(), sorted_.end());
    cur_.resize(n_);
    used_.assign(n_, 0);
    cur_key_.resize(n_ * n_);
  }

  // Full search: the lexicographically smallest key among admissible orderings.
  void run() { descend(0, false); }

  // Returns true when some admissible ordering beats the identity.
  bool identity_beaten() {
    for (std::size_t v = 0; v < n_; ++v)
      if (inv_[v] != sorted_[v]) return true;
    best_.resize(n_);
    std::iota(best_.begin(), best_.end(), 0);
    best_key_.resize(n_ * n_);
    for (std::size_t k = 0; k < n_; ++k) fill_block(best_, k, best_key_);
    has_best_ = true;
    stop_on_update_ = true;
    return descend(0, false);
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  void fill_block(const std::vector<std::size_t>& order, std::size_t k, std::vector<long>& key) const {
    std::size_t off = k * k;
    std::size_t vk = order[k];
    key[off] = a_(vk, vk);
    for (std::size_t j = 0; j < k; ++j) {
      key[off + 1 + 2 * j] = a_(order[j], vk);
      key[off + 2 + 2 * j] = a_(vk, order[j]);
    }
  }

  bool descend(std::size_t k, bool less) {
    if (k == n_) {
      if (!has_best_ || less) {
        best_ = cur_;
        best_key_ = cur_key_;
        has_best_ = true;
        return true;
      }
      return false;
    }
    bool updated = false;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || inv_[v] != sorted_[k]) continue;
      cur_[k] = v;
      fill_block(cur_, k, cur_key_);
      int c = -1;
      if (has_best_ && !less) {
        c = 0;
        std::size_t off = k * k;
        for (std::size_t i = off; i < off + 2 * k + 1; ++i) {
          if (cur_key_[i] != best_key_[i]) {
            c = cur_key_[i] < best_key_[i] ? -1 : 1;
            break;
          }
        }
      }
      if (c > 0) continue;
      used_[v] = 1;
      bool sub = descend(k + 1, c < 0);
      used_[v] = 0;
      if (sub) {
        updated = true;
        less = false;
        if (stop_on_update_) return true;
      }
    }
    return updated;
  }

  const IntMatrix& a_;
  std::size_t n_;
  std::vector<VertexInvariant> inv_;
  std::vector<VertexInvariant> sorted_;
  std::vector<std::size_t> cur_;
  std::vector<std::size_t> best_;
  std::vector<char> used_;
  std::vector<long> cur_key_;
  std::vector<long> best_key_;
  bool has_best_ = false;
  bool stop_on_update_ = false;
};

void check_bound(const Digraph& g, std::size_t max_order) {
  if (g.order() > max_order) throw std::invalid_argument("digraph order exceeds the canonical-form bound");
}

}  // namespace

CanonicalLabeling canonical_labeling(const Digraph& g, std::size_t max_order) {
  check_bound(g, max_order);
  CanonicalSearch search(g);
  search.run();
  Permutation order(search.best());
  return {g.relabel(order.inverse()), order};
}

Digraph canonical_form(const Digraph& g, std::size_t max_order) { return canonical_labeling(g, max_order).form; }

bool is_canonical(const Digraph& g, std::size_t max_order) {
  check_bound(g, max_order);
  CanonicalSearch search(g);
  return !search.identity_beaten();
}

std::optional<Permutation> find_isomorphism(const Digraph& g, const Digraph& h, std::size_t max_order) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto cg = canonical_labeling(g, max_order);
  auto ch = canonical_labeling(h, max_order);
  if (cg.form != ch.form) return std::nullopt;
  return ch.order * cg.order.inverse();
}

bool is_isomorphic(const Digraph& g, const Digraph& h, std::size_t max_order) {
  return find_isomorphism(g, h, max_order).has_value();
}

// WeightedDigraph --------------------------------------------------------------

WeightedDigraph::WeightedDigraph(RationalMatrix weights) : w_(std::move(weights)) {
  if (!w_.is_square()) throw std::invalid_argument("weight matrix must be square");
}

WeightedDigraph WeightedDigraph::unit_weights(const Digraph& g) {
  WeightedDigraph w(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      long m = g.multiplicity(i, j);
      if (m > 1) throw std::invalid_argument("weighted digraphs cannot have parallel edges");
      if (m == 1) w.w_(i, j) = 1;
    }
  return w;
}

long WeightedDigraph::edge_count() const {
  long m = 0;
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) m += has_edge(i, j) ? 1 : 0;
  return m;
}

void WeightedDigraph::set_weight(std::size_t i, std::size_t j, const Rational& w) {
  if (i >= order() || j >= order()) throw std::out_of_range("edge endpoint out of range");
  if (sgn(w) == 0) throw std::invalid_argument("edge weights must be nonzero");
  w_(i, j) = w;
}

IntMatrix WeightedDigraph::support() const {
  return w_.map([](const Rational& w) { return sgn(w) != 0 ? 1L : 0L; });
}

bool WeightedDigraph::has_reciprocal_weights() const {
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j)
      if (has_edge(i, j) && has_edge(j, i) && w_(i, j) * w_(j, i) != 1) return false;
  return true;
}

std::pair<long, long> signed_loop_counts(const WeightedDigraph& g) {
  long plus = 0;
  long minus = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!g.has_edge(i, i)) continue;
    if (g.weight(i, i) == 1) {
      ++plus;
    } else if (g.weight(i, i) == -1) {
      ++minus;
    } else {
      throw std::invalid_argument("loop weight must be +1 or -1");
    }
  }
  return {plus, minus};
}

WeightedViews weighted_views(const WeightedDigraph& g) {
  const std::size_t n = g.order();
  WeightedViews v;
  v.w = g.weights();
  v.a = g.support();
  v.w_star = RationalMatrix(n, n);
  v.a_sym = IntMatrix(n, n);
  v.w_sym = RationalMatrix(n, n);
  v.d_sym = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g.has_edge(j, i)) v.w_star(i, j) = 1 / g.weight(j, i);
      v.a_sym(i, j) = v.a(i, j) * v.a(j, i);
      if (v.a_sym(i, j) != 0) v.w_sym(i, j) = v.w(i, j);
      v.d_sym(i, i) += v.a_sym(i, j);
    }
  try {
    auto [plus, minus] = signed_loop_counts(g);
    v.loops_plus = plus;
    v.loops_minus = minus;
  } catch (const std::invalid_argument&) {
  }
  // reverse pairs: off-diagonal entries of A^sym, halved
  long tr_a2 = 0;
  long tr_a = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tr_a += v.a(i, i);
    for (std::size_t k = 0; k < n; ++k) tr_a2 += v.a(i, k) * v.a(k, i);
  }
  v.reverse_pairs = (tr_a2 - tr_a) / 2;
  return v;
}

}  // namespace zetaeq
