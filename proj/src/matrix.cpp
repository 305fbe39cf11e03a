#include "zetaeq/matrix.hpp"

#include <sstream>
#include <utility>

namespace zetaeq {

RationalMatrix to_rational(const IntMatrix& m) {
  return m.map([](long v) { return Rational(v); });
}

PolyMatrix to_poly(const IntMatrix& m) {
  return m.map([](long v) { return MultiPoly(v); });
}

PolyMatrix to_poly(const RationalMatrix& m) {
  return m.map([](const Rational& v) { return MultiPoly(v); });
}

PolyMatrix scaled(const MultiPoly& p, const IntMatrix& m) {
  return m.map([&](long v) { return v == 0 ? MultiPoly() : p * Rational(v); });
}

PolyMatrix scaled(const MultiPoly& p, const RationalMatrix& m) {
  return m.map([&](const Rational& v) { return sgn(v) == 0 ? MultiPoly() : p * v; });
}

MultiPoly det_fraction_free(const PolyMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return MultiPoly(1L);
  PolyMatrix m = input;
  MultiPoly prev(1L);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Sparsest nonzero pivot keeps intermediate entries small.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (pivot == n || m(i, k).size() < m(pivot, k).size()) pivot = i;
    }
    if (pivot == n) return {};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    const MultiPoly& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = m(i, k).is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m(i, j) * p;
        if (!lead_zero && !m(k, j).is_zero()) v -= m(i, k) * m(k, j);
        m(i, j) = prev.is_constant() ? v * (Rational(1) / prev.constant_term()) : v.divide_exact(prev);
      }
      m(i, k) = MultiPoly();
    }
    prev = m(k, k);
  }
  MultiPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

template <typename F>
F bareiss_numeric(Matrix<F> m) {
  const std::size_t n = m.rows();
  if (n == 0) return F(1);
  F prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        F v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = v / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return negate ? F(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss_numeric<Rational>(m);
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss_numeric<Integer>(m.map([](long v) { return Integer(v); }));
}

RationalMatrix inverse(const RationalMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix a = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(pivot, j));
      std::swap(inv(k, j), inv(pivot, j));
    }
    Rational p = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

namespace {

PolyMatrix char_matrix(const IntMatrix& a) {
  const std::size_t n = a.rows();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = MultiPoly(-a(i, j));
  for (std::size_t i = 0; i < n; ++i) m(i, i) += MultiPoly::var(Var::x);
  return m;
}

}  // namespace

PolyMatrix adjugate_char_matrix_minors(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  PolyMatrix xa = char_matrix(a);
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = MultiPoly(1L);
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // adj(i, j) is the (j, i) cofactor.
      PolyMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == c) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == r) continue;
          minor(mi, mj++) = xa(i, j);
        }
        ++mi;
      }
      MultiPoly d = det_fraction_free(minor);
      adj(r, c) = ((r + c) % 2 == 0) ? d : -d;
    }
  }
  return adj;
}

PolyMatrix adjugate_char_matrix_leverrier(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  PolyMatrix adj(n, n);
  if (n == 0) return adj;
  RationalMatrix ar = to_rational(a);
  RationalMatrix mk(n, n);  // M_0 = 0
  Rational c = 1;           // c_n
  // adj(xI - A) = sum_k M_k x^(n-k)
  for (std::size_t k = 1; k <= n; ++k) {
    const MultiPoly xpow = MultiPoly::var(Var::x, static_cast<unsigned>(n - k));
    mk = ar * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mk(i, j) != 0) adj(i, j) += xpow * mk(i, j);
    RationalMatrix amk = ar * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c = -tr / static_cast<long>(k);
  }
  return adj;
}

PolyMatrix adjugate_char_matrix(const IntMatrix& a, std::size_t minor_cutoff) {
  return a.rows() <= minor_cutoff ? adjugate_char_matrix_minors(a) : adjugate_char_matrix_leverrier(a);
}

MultiPoly characteristic_polynomial(const RationalMatrix& input, Var v) {
  if (!input.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix h = input;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      Rational u = h(r, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }
  // p_k = det(xI - H[0..k)) by the Hessenberg recurrence; coefficients stored low to high.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> next(k + 1, Rational(0));
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] += prev[d];
      next[d] -= h(k - 1, k - 1) * prev[d];
    }
    Rational prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (prod == 0) break;
      Rational f = prod * h(k - i - 1, k - 1);
      const auto& q = p[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] -= f * q[d];
    }
    p[k] = std::move(next);
  }
  return MultiPoly::from_univariate(v, p[n]);
}

MultiPoly characteristic_polynomial(const IntMatrix& a, Var v) { return characteristic_polynomial(to_rational(a), v); }

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense poly_rem(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

int sign_at_infinity(const Dense& p, bool negative) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (negative && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

std::size_t sign_changes(const std::vector<Dense>& seq, bool negative) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at_infinity(p, negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const MultiPoly& p, Var v) {
  Dense f = p.univariate_coefficients(v);
  trim(f);
  if (f.size() <= 1) {
    if (f.empty()) throw std::domain_error("zero polynomial has infinitely many roots");
    return 0;
  }
  Dense df(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<long>(i);
  std::vector<Dense> seq{f, df};
  while (true) {
    Dense r = poly_rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, true) - sign_changes(seq, false);
}

std::string describe(const PolyMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

}  // namespace zetaeq
