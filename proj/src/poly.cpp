#include "zetaeq/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zetaeq {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "x", "y", "tu", "td", "uu", "ud", "tuu", "tdd", "tud", "tdu", "a", "b", "su", "sd", "t"};

bool term_greater(const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; }

// Merges two sorted term lists, scaling the second by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = grlex_compare(a[i].mono, b[j].mono);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(s) != 0) out.emplace_back(a[i].mono, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Monomial Monomial::of(Var v, unsigned e) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (auto e : exp) s += e;
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    unsigned e = unsigned{a.exp[i]} + b.exp[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return m;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree();
  unsigned db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exp) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// MultiPoly ------------------------------------------------------------------

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial::one(), Rational(c));
}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial::one(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(m, c);
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
  return d;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.total_degree(); }

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.total_degree();
  return terms_.back().mono.total_degree() == d;
}

MultiPoly MultiPoly::coefficient(Var v, unsigned k) const {
  std::vector<Term> out;
  auto idx = static_cast<std::size_t>(v);
  for (const auto& t : terms_) {
    if (t.mono.exp[idx] == k) {
      Monomial m = t.mono;
      m.exp[idx] = 0;
      out.emplace_back(m, t.coeff);
    }
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const MultiPoly& big = p.size() >= q.size() ? p : q;
  const MultiPoly& small = p.size() >= q.size() ? q : p;
  if (small.size() == 1) {
    // Multiplying by a monomial preserves the order.
    MultiPoly r;
    r.terms_.reserve(big.size());
    const Term& s = small.terms_[0];
    for (const auto& t : big.terms_) r.terms_.emplace_back(t.mono * s.mono, t.coeff * s.coeff);
    return r;
  }
  struct Key {
    Monomial mono;
    std::uint32_t i;
    std::uint32_t j;
  };
  std::vector<Key> keys;
  keys.reserve(big.size() * small.size());
  for (std::uint32_t i = 0; i < big.size(); ++i) {
    for (std::uint32_t j = 0; j < small.size(); ++j) {
      keys.push_back({big.terms_[i].mono * small.terms_[j].mono, i, j});
    }
  }
  std::sort(keys.begin(), keys.end(),
            [](const Key& a, const Key& b) { return grlex_compare(a.mono, b.mono) > 0; });
  MultiPoly r;
  Rational acc;
  Rational prod;
  for (std::size_t k = 0; k < keys.size();) {
    std::size_t l = k;
    acc = 0;
    while (l < keys.size() && keys[l].mono == keys[k].mono) {
      mpq_mul(prod.get_mpq_t(), big.terms_[keys[l].i].coeff.get_mpq_t(), small.terms_[keys[l].j].coeff.get_mpq_t());
      acc += prod;
      ++l;
    }
    if (sgn(acc) != 0) r.terms_.emplace_back(keys[k].mono, acc);
    k = l;
  }
  return r;
}

bool operator==(const MultiPoly& p, const MultiPoly& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (d.size() == 1) {
    const Term& lt = d.terms_[0];
    MultiPoly q;
    q.terms_.reserve(size());
    for (const auto& t : terms_) {
      if (!lt.mono.divides(t.mono)) throw std::domain_error("inexact polynomial division");
      q.terms_.emplace_back(t.mono / lt.mono, t.coeff / lt.coeff);
    }
    return q;
  }
  const Term& lt = d.terms_[0];
  std::vector<Term> quotient;
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const Term& r0 = rem.terms_[0];
    if (!lt.mono.divides(r0.mono)) throw std::domain_error("inexact polynomial division");
    MultiPoly step(r0.mono / lt.mono, r0.coeff / lt.coeff);
    quotient.push_back(step.terms_[0]);
    rem -= step * d;
  }
  MultiPoly q;
  q.terms_ = std::move(quotient);
  return q;
}

Rational MultiPoly::eval(const Point& point) const {
  std::array<const Rational*, kVarCount> val{};
  for (const auto& [v, r] : point) val[static_cast<std::size_t>(v)] = &r;
  Rational sum = 0;
  Rational term;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (val[i] == nullptr) {
        throw std::invalid_argument("eval: variable '" + std::string(kVarNames[i]) + "' is unassigned");
      }
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) term *= *val[i];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  auto idx = static_cast<std::size_t>(v);
  unsigned dmax = degree(v);
  if (dmax == 0) return *this;
  std::vector<MultiPoly> powers{MultiPoly(1L)};
  for (unsigned k = 1; k <= dmax; ++k) powers.push_back(powers.back() * value);
  std::vector<MultiPoly> buckets(dmax + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m.exp[idx];
    m.exp[idx] = 0;
    buckets[e].terms_.emplace_back(m, t.coeff);
  }
  MultiPoly result;
  for (unsigned k = 0; k <= dmax; ++k) {
    if (buckets[k].is_zero()) continue;
    // Removing one variable can reorder terms, so normalise before use.
    MultiPoly b = from_terms(std::move(buckets[k].terms_));
    result += b * powers[k];
  }
  return result;
}

MultiPoly MultiPoly::specialize(const Point& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Rational c = t.coeff;
    for (const auto& [v, r] : values) {
      auto idx = static_cast<std::size_t>(v);
      for (unsigned k = 0; k < m.exp[idx]; ++k) c *= r;
      m.exp[idx] = 0;
    }
    if (sgn(c) != 0) out.emplace_back(m, std::move(c));
  }
  return from_terms(std::move(out));
}

std::vector<Rational> MultiPoly::univariate_coefficients(Var v) const {
  std::vector<Rational> c(degree(v) + 1, Rational(0));
  auto idx = static_cast<std::size_t>(v);
  for (const auto& t : terms_) {
    if (t.mono.total_degree() != t.mono.exp[idx]) {
      throw std::invalid_argument("polynomial is not univariate in " + std::string(var_name(v)));
    }
    c[t.mono.exp[idx]] = t.coeff;
  }
  if (is_zero()) c.clear();
  return c;
}

MultiPoly MultiPoly::from_univariate(Var v, const std::vector<Rational>& coeffs) {
  MultiPoly p;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (sgn(coeffs[k]) != 0) p.terms_.emplace_back(Monomial::of(v, static_cast<unsigned>(k)), coeffs[k]);
  }
  return p;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kVarNames[i];
      if (t.mono.exp[i] > 1) mono += "^" + std::to_string(t.mono.exp[i]);
    }
    if (mono.empty()) {
      os << zetaeq::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << zetaeq::to_string(mag) << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

// Fingerprints ----------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::array<std::uint64_t, kVarCount> fingerprint_point(std::uint64_t seed) {
  std::array<std::uint64_t, kVarCount> pt{};
  std::uint64_t state = seed;
  for (auto& v : pt) v = splitmix64(state) % kFingerprintPrime;
  return pt;
}

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kFingerprintPrime ? s - kFingerprintPrime : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kFingerprintPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kFingerprintPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  return add(lo, hi % kFingerprintPrime);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw std::domain_error("modular inverse of zero");
  return pow(a, kFingerprintPrime - 2);
}

std::uint64_t reduce(const Rational& r) {
  static_assert(sizeof(unsigned long) == 8);
  Integer num = r.get_num();
  std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), kFingerprintPrime);
  std::uint64_t d = mpz_fdiv_ui(r.get_den().get_mpz_t(), kFingerprintPrime);
  return mul(n, inv(d));
}

}  // namespace modp

std::uint64_t fingerprint(const MultiPoly& p, std::uint64_t seed) {
  auto pt = fingerprint_point(seed);
  std::uint64_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = modp::reduce(t.coeff);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (t.mono.exp[i] != 0) v = modp::mul(v, modp::pow(pt[i], t.mono.exp[i]));
    }
    sum = modp::add(sum, v);
  }
  return sum;
}

}  // namespace zetaeq

namespace zetaeq {

Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace zetaeq
