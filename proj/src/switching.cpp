#include "zetaeq/switching.hpp"

#include <sstream>
#include <stdexcept>

#include "zetaeq/charpoly.hpp"
#include "zetaeq/figures.hpp"

namespace zetaeq {

namespace {

using Block = std::vector<std::size_t>;

long count(const Digraph& g, const Block& from, const Block& to) {
  long c = 0;
  for (auto u : from)
    for (auto v : to) c += g.multiplicity(u, v);
  return c;
}

long count_out(const Digraph& g, std::size_t v, const Block& to) { return count(g, {v}, to); }
long count_in(const Digraph& g, const Block& from, std::size_t v) { return count(g, from, {v}); }

std::string name(std::size_t v) { return std::to_string(v + 1); }

std::string show(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + name(b[i]);
  return s + "}";
}

Block join(const Block& a, const Block& b) {
  Block c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

enum class Link { none, half, full, mixed };

// Per-vertex link of `from` to `to`: every v in `from` sends 0, |to|/2 or |to| edges.
Link link(const Digraph& g, const Block& from, const Block& to) {
  std::optional<long> c;
  for (auto v : from) {
    long k = count_out(g, v, to);
    if (c && *c != k) return Link::mixed;
    c = k;
  }
  if (!c || *c == 0) return Link::none;
  if (*c == static_cast<long>(to.size())) return Link::full;
  if (2 * *c == static_cast<long>(to.size())) return Link::half;
  return Link::mixed;
}

// Column count of edges from a block into one vertex.
Link link_into(const Digraph& g, const Block& from, std::size_t v) {
  long k = count_in(g, from, v);
  if (k == 0) return Link::none;
  if (k == static_cast<long>(from.size())) return Link::full;
  if (2 * k == static_cast<long>(from.size())) return Link::half;
  return Link::mixed;
}

Link link_from(const Digraph& g, std::size_t v, const Block& to) { return link(g, {v}, to); }

class Validator {
 public:
  Validator(const Digraph& g, const SwitchingPartition& p) : g_(g), p_(p) {}

  ValidationReport run() {
    check_structure();
    check_phi_isomorphism();
    check_equitable("equitable V", p_.v_blocks);
    check_equitable("equitable V'", p_.v_prime_blocks);
    check_equitable("equitable W", p_.w_blocks);
    check_v_x();
    compute_deltas();
    check_w_x();
    check_v_w();
    check_v_v_prime();
    check_cross_blocks();
    return std::move(report_);
  }

 private:
  void issue(std::string condition, std::string detail) { report_.issues.push_back({std::move(condition), std::move(detail)}); }

  void check_structure() {
    if (!g_.is_simple()) throw std::invalid_argument("switching requires a simple digraph");
    const std::size_t n = g_.order();
    std::vector<int> seen(n, 0);
    auto mark = [&](const Block& b) {
      for (auto v : b) {
        if (v >= n) throw std::invalid_argument("partition vertex out of range");
        if (seen[v]++) throw std::invalid_argument("vertex " + name(v) + " appears in more than one block");
      }
    };
    for (const auto& b : p_.v_blocks) mark(b);
    for (const auto& b : p_.v_prime_blocks) mark(b);
    for (const auto& b : p_.w_blocks) mark(b);
    mark(p_.x);
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v]) throw std::invalid_argument("vertex " + name(v) + " is not covered by the partition");
    if (p_.v_blocks.size() != p_.v_prime_blocks.size()) throw std::invalid_argument("V and V' have different block counts");
    std::size_t v_total = 0;
    for (std::size_t i = 0; i < p_.v_blocks.size(); ++i) {
      const auto& vi = p_.v_blocks[i];
      const auto& vpi = p_.v_prime_blocks[i];
      if (vi.empty() || vi.size() != vpi.size()) throw std::invalid_argument("V_i and V'_i must be nonempty and equally large");
      v_total += vi.size();
      std::vector<int> hit(vpi.size(), 0);
      for (auto v : vi) {
        auto it = p_.phi.find(v);
        if (it == p_.phi.end()) throw std::invalid_argument("phi undefined on vertex " + name(v));
        std::size_t pos = 0;
        while (pos < vpi.size() && vpi[pos] != it->second) ++pos;
        if (pos == vpi.size() || hit[pos]++) throw std::invalid_argument("phi does not map V_i bijectively onto V'_i");
      }
    }
    if (p_.phi.size() != v_total) throw std::invalid_argument("phi is defined outside V");
    for (const auto& b : p_.w_blocks)
      if (b.empty()) throw std::invalid_argument("empty W block");
  }

  void check_phi_isomorphism() {
    for (const auto& [u, pu] : p_.phi)
      for (const auto& [w, pw] : p_.phi)
        if (g_.multiplicity(u, w) != g_.multiplicity(pu, pw))
          issue("phi", "edge " + name(u) + "->" + name(w) + " is not mapped to " + name(pu) + "->" + name(pw));
  }

  void check_equitable(const std::string& label, const std::vector<Block>& blocks) {
    for (const auto& b : blocks)
      for (const auto& c : blocks) {
        for (auto v : b) {
          if (count_out(g_, v, c) != count_out(g_, b.front(), c))
            issue(label, "vertices " + name(b.front()) + " and " + name(v) + " send different edge counts to " + show(c));
          if (count_in(g_, c, v) != count_in(g_, c, b.front()))
            issue(label, "vertices " + name(b.front()) + " and " + name(v) + " receive different edge counts from " + show(c));
        }
      }
  }

  void check_v_x() {
    for (std::size_t i = 0; i < p_.v_blocks.size(); ++i) {
      for (int prime = 0; prime < 2; ++prime) {
        const Block& b = prime ? p_.v_prime_blocks[i] : p_.v_blocks[i];
        const std::string cond = prime ? "(2)" : "(1)";
        for (auto x : p_.x) {
          Link out = link_from(g_, x, b);
          Link in = link_into(g_, b, x);
          if (out != Link::none && out != Link::full) issue(cond, name(x) + " is partly linked to " + show(b));
          if (in != Link::none && in != Link::full) issue(cond, show(b) + " is partly linked to " + name(x));
        }
      }
    }
  }

  void compute_deltas() {
    for (std::size_t i = 0; i < p_.v_blocks.size(); ++i) {
      const auto& vi = p_.v_blocks[i];
      const auto& vpi = p_.v_prime_blocks[i];
      const long delta = count_out(g_, vpi.front(), p_.x) - count_out(g_, vi.front(), p_.x);
      report_.deltas.push_back(delta);
      for (auto v : vi)
        for (auto vp : vpi) {
          long out = count_out(g_, vp, p_.x) - count_out(g_, v, p_.x);
          long in = count_in(g_, p_.x, vp) - count_in(g_, p_.x, v);
          if (out != delta || in != delta)
            issue("(3)", "pair (" + name(v) + ", " + name(vp) + ") has X-differences " + std::to_string(out) + "/" +
                             std::to_string(in) + ", expected " + std::to_string(delta));
        }
    }
  }

  void check_w_x() {
    for (const auto& w : p_.w_blocks) {
      for (auto x : p_.x) {
        if (link_from(g_, x, w) == Link::mixed) issue("(4)", name(x) + " is not unlinked, half- or fully linked to " + show(w));
        if (link_into(g_, w, x) == Link::mixed) issue("(4)", show(w) + " is not unlinked, half- or fully linked to " + name(x));
      }
      for (auto v : w) {
        if (count_out(g_, v, p_.x) != count_out(g_, w.front(), p_.x))
          issue("(5)", "out-degrees into X differ on " + show(w));
        if (count_in(g_, p_.x, v) != count_in(g_, p_.x, w.front()))
          issue("(5)", "in-degrees from X differ on " + show(w));
      }
    }
  }

  void check_v_w() {
    for (std::size_t i = 0; i < p_.v_blocks.size(); ++i) {
      const Block u = join(p_.v_blocks[i], p_.v_prime_blocks[i]);
      for (const auto& w : p_.w_blocks) {
        const long out = count(g_, u, w), in = count(g_, w, u);
        const long full = static_cast<long>(u.size() * w.size());
        if (out != 0 && out != full) issue("(6)", show(u) + " is partly linked to " + show(w));
        if (in != 0 && in != full) issue("(6)", show(w) + " is partly linked to " + show(u));
      }
    }
  }

  void check_v_v_prime() {
    for (std::size_t i = 0; i < p_.v_blocks.size(); ++i) {
      for (auto v : p_.v_blocks[i]) {
        const std::size_t pv = p_.phi.at(v);
        for (auto w : p_.v_prime_blocks[i]) {
          const long want = w == pv ? 1 : 0;
          if (g_.multiplicity(v, w) != want || g_.multiplicity(w, v) != want)
            issue("(7)", "edges between " + name(v) + " and " + name(w) + (want ? " must exist both ways" : " must be absent"));
        }
      }
    }
  }

  void check_cross_blocks() {
    const std::size_t p = p_.v_blocks.size();
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        if (i == j) continue;
        const Block& vi = p_.v_blocks[i];
        const Block& vpi = p_.v_prime_blocks[i];
        const Block& vj = p_.v_blocks[j];
        const Block& vpj = p_.v_prime_blocks[j];
        const Link a = link(g_, vi, vpj), b = link(g_, vpi, vj);
        const bool cross_uniform = (a == Link::none && b == Link::none) || (a == Link::full && b == Link::full);
        const std::string where = "blocks " + std::to_string(i + 1) + "," + std::to_string(j + 1);
        if (report_.deltas[i] != report_.deltas[j]) {
          const Link c = link(g_, vi, vj), d = link(g_, vpi, vpj);
          const bool same_uniform = (c == Link::none && d == Link::none) || (c == Link::full && d == Link::full);
          if (!cross_uniform) issue("(8)", where + ": V_i->V'_j and V'_i->V_j must be both empty or both complete");
          if (!same_uniform) issue("(8)", where + ": V_i->V_j and V'_i->V'_j must be both empty or both complete");
          continue;
        }
        if (cross_uniform) continue;
        bool half = a == Link::half && b == Link::half;
        for (auto vp : vpj) half = half && 2 * count_in(g_, vi, vp) == static_cast<long>(vi.size());
        if (half) {
          for (auto v : vi)
            for (auto vp : vpj) {
              std::size_t back = 0;
              for (const auto& [u, pu] : p_.phi)
                if (pu == vp) back = u;
              if ((g_.multiplicity(v, vp) != 0) == (g_.multiplicity(p_.phi.at(v), back) != 0)) {
                issue("(8)", where + ": edge " + name(v) + "->" + name(vp) + " must be present exactly when " +
                                 name(p_.phi.at(v)) + "->" + name(back) + " is absent");
              }
            }
        } else {
          issue("(8)", where + ": V_i->V'_j and V'_i->V_j are neither uniform nor complementary halves");
        }
      }
  }

  const Digraph& g_;
  const SwitchingPartition& p_;
  ValidationReport report_;
};

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (valid()) os << "partition valid\n";
  for (const auto& i : issues) os << "violated " << i.condition << ": " << i.detail << '\n';
  return os.str();
}

ValidationReport validate_partition(const Digraph& g, const SwitchingPartition& p) { return Validator(g, p).run(); }

RationalMatrix q_block(std::size_t n) {
  RationalMatrix q(n, n, ratio(2, static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i) q(i, i) -= 1;
  return q;
}

RationalMatrix r_sym_block(std::size_t n) {
  RationalMatrix r(n, n, ratio(2, static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i) r(i, i) -= 2;
  return r;
}

RationalMatrix r_block(std::size_t n) {
  const RationalMatrix s = r_sym_block(n);
  RationalMatrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, n + j) = s(i, j);
      r(n + i, j) = -s(i, j);
    }
  return r;
}

ConjugatorPair build_conjugators(const Digraph& g, const SwitchingPartition& p) {
  const ValidationReport report = validate_partition(g, p);
  const std::size_t n = g.order();
  ConjugatorPair pair{RationalMatrix(n, n), RationalMatrix(n, n)};
  auto place = [&](RationalMatrix& target, const Block& order, const RationalMatrix& block, const Rational& scale) {
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j) target(order[i], order[j]) = scale * block(i, j);
  };
  for (std::size_t i = 0; i < p.v_blocks.size(); ++i) {
    // V_i in listed order followed by its image under phi.
    Block u = p.v_blocks[i];
    for (auto v : p.v_blocks[i]) u.push_back(p.phi.at(v));
    place(pair.q, u, q_block(u.size()), Rational(1));
    place(pair.r, u, r_block(p.v_blocks[i].size()), ratio(report.deltas[i], 4));
  }
  for (const auto& w : p.w_blocks) place(pair.q, w, q_block(w.size()), Rational(1));
  for (auto x : p.x) pair.q(x, x) = 1;
  return pair;
}

Digraph perform_switching(const Digraph& g, const SwitchingPartition& p) {
  const ValidationReport report = validate_partition(g, p);
  if (!report.valid()) throw std::invalid_argument("invalid switching partition:\n" + report.summary());
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < p.v_blocks.size(); ++i) blocks.push_back(join(p.v_blocks[i], p.v_prime_blocks[i]));
  blocks.insert(blocks.end(), p.w_blocks.begin(), p.w_blocks.end());
  Digraph out = g;
  for (auto x : p.x)
    for (const auto& b : blocks) {
      if (link_from(g, x, b) == Link::half)
        for (auto v : b) out.set_multiplicity(x, v, 1 - g.multiplicity(x, v));
      if (link_into(g, b, x) == Link::half)
        for (auto v : b) out.set_multiplicity(v, x, 1 - g.multiplicity(v, x));
    }
  const ConjugatorPair pair = build_conjugators(g, p);
  const RationalMatrix a = to_rational(g.adjacency());
  if (pair.q * a * pair.q != to_rational(out.adjacency())) throw std::logic_error("switched adjacency differs from Q A Q");
  return out;
}

bool Certificate::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::string Certificate::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
  if (!det_conjugator.is_zero()) os << "det(Q + t R) = " << det_conjugator.to_string() << '\n';
  return os.str();
}

namespace {

PolyMatrix completed_laplacian(const Digraph& g) {
  const std::size_t n = g.order();
  PolyMatrix m = generalized_laplacian(g);
  const MultiPoly x = MultiPoly::var(Var::x), y = MultiPoly::var(Var::y);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) += x;
    for (std::size_t j = 0; j < n; ++j) m(i, j) += y;
  }
  return m;
}

}  // namespace

Certificate certify(const Digraph& g, const Digraph& switched, const ConjugatorPair& pair, bool compare_polynomials) {
  Certificate cert;
  auto check = [&](std::string label, bool ok) { cert.checks.push_back({std::move(label), ok}); };
  const std::size_t n = g.order();
  const RationalMatrix& q = pair.q;
  const RationalMatrix& r = pair.r;
  const RationalMatrix id = RationalMatrix::identity(n);
  const RationalMatrix j(n, n, Rational(1));
  const RationalMatrix a = to_rational(g.adjacency()), a2 = to_rational(switched.adjacency());
  const RationalMatrix dout = to_rational(g.out_degree_matrix()), dout2 = to_rational(switched.out_degree_matrix());
  const RationalMatrix din = to_rational(g.in_degree_matrix()), din2 = to_rational(switched.in_degree_matrix());

  check("Q = Q^T = Q^-1", q == q.transpose() && q * q == id);
  check("R skew-symmetric", r == Rational(-1) * r.transpose());
  check("Q J = J Q = J", q * j == j && j * q == j);
  check("R J = J R = 0", (r * j).is_zero() && (j * r).is_zero());
  check("Q A Q = A'", q * a * q == a2);
  check("R Dout = Dout' R", r * dout == dout2 * r);
  check("R Din = Din' R", r * din == din2 * r);
  const RationalMatrix commutator = r * a - a2 * r;
  check("R A - A' R = -(Q Dout - Dout' Q)", commutator == dout2 * q - q * dout);
  check("R A - A' R = -(Q Din - Din' Q)", commutator == din2 * q - q * din);

  const MultiPoly t = MultiPoly::var(Var::t);
  const PolyMatrix conj = to_poly(q) + scaled(t, r);
  const PolyMatrix lhs = conj * completed_laplacian(g) - completed_laplacian(switched) * conj;
  const MultiPoly factor = t * (MultiPoly::var(Var::uu) + MultiPoly::var(Var::ud)) -
                           (MultiPoly::var(Var::tu) + MultiPoly::var(Var::td));
  check("(Q + t R) L_G - L_G' (Q + t R) = (t (uu + ud) - (tu + td)) (R A - A' R)", lhs == scaled(factor, commutator));

  cert.det_conjugator = det_fraction_free(conj);
  check("det(Q + t R) has no real root", !cert.det_conjugator.is_zero() && count_real_roots(cert.det_conjugator, Var::t) == 0);

  if (compare_polynomials) {
    check("eta(G) = eta(G')", eta(g).poly == eta(switched).poly);
    check("eta(complement G) = eta(complement G')", eta(complement(g)).poly == eta(complement(switched)).poly);
  }
  return cert;
}

PolyMatrix fig1a_conjugator() {
  const MultiPoly tu = MultiPoly::var(Var::tu), td = MultiPoly::var(Var::td);
  const MultiPoly uu = MultiPoly::var(Var::uu), ud = MultiPoly::var(Var::ud);
  const MultiPoly o;
  const MultiPoly uu2 = uu * uu, ud2 = ud * ud, uuud = uu * ud;
  PolyMatrix m(5, 5);
  const MultiPoly rows[5][5] = {
      {uu2 - td * ud, uuud, o, o, o},
      {ud2, uu2 + td * ud, ud2, uuud, o},
      {o, ud2, uuud, uu2, o},
      {o, uuud, uu2, ud2 + tu * uu, uu2},
      {o, o, o, uuud, ud2 - uu * tu},
  };
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 0; k < 5; ++k) m(i, k) = rows[i][k];
  return m;
}

Certificate verify_fig1a_conjugator() {
  Certificate cert;
  const PolyMatrix m = fig1a_conjugator();
  const PolyMatrix lg = generalized_laplacian(fig1a_left());
  const PolyMatrix lg2 = generalized_laplacian(fig1a_right());
  cert.checks.push_back({"M L_G = L_G' M", m * lg == lg2 * m});
  const MultiPoly tu = MultiPoly::var(Var::tu), td = MultiPoly::var(Var::td);
  const MultiPoly uu = MultiPoly::var(Var::uu), ud = MultiPoly::var(Var::ud);
  const MultiPoly expected = (uu.pow(5) - Rational(2) * uu.pow(2) * ud.pow(3) - td.pow(2) * uu * ud.pow(2) + td * ud.pow(4)) *
                             (ud.pow(5) - Rational(2) * ud.pow(2) * uu.pow(3) - tu.pow(2) * ud * uu.pow(2) + tu * uu.pow(4));
  const MultiPoly det = det_fraction_free(m);
  cert.checks.push_back({"det M matches the stated factorization", det == expected});
  const Point origin{{Var::tu, Rational(0)}, {Var::td, Rational(0)}, {Var::ud, Rational(0)}};
  cert.checks.push_back({"M singular at tu = td = ud = 0", det.specialize(origin).is_zero()});
  return cert;
}

}  // namespace zetaeq
