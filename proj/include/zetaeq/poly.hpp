// Sparse multivariate polynomials over the rationals.
//
// Every polynomial in this library lives in one fixed ring whose indeterminates
// are the members of `Var`. Terms are kept sorted in descending graded
// lexicographic order (total degree first, then exponents compared in `Var`
// order), no zero coefficient is ever stored, and two polynomials are equal
// exactly when their term vectors are equal.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace zetaeq {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms; throws std::domain_error for a zero denominator.
Rational ratio(long num, long den);

/// Indeterminates, in monomial-order priority.
///
/// `tu`/`td` are the out-/in-degree coefficients, `uu`/`ud` the forward and
/// backward step variables, `tuu`..`tdu` the four bump variables of the edge
/// zeta function, `a`/`b` the lazy/deadly Markov parameters and `su`/`sd` the
/// bump products of the closed forms. `t` is the conjugation parameter used by
/// switching certificates.
enum class Var : std::uint8_t { x, y, tu, td, uu, ud, tuu, tdd, tud, tdu, a, b, su, sd, t };

inline constexpr std::size_t kVarCount = 15;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

struct Monomial {
  std::array<std::uint16_t, kVarCount> exp{};

  static Monomial one() { return {}; }
  static Monomial of(Var v, unsigned e = 1);

  unsigned degree(Var v) const { return exp[static_cast<std::size_t>(v)]; }
  unsigned total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic comparison: negative if a < b, zero if equal.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Rational coeff;

  Term(const Monomial& m, Rational c) : mono(m), coeff(std::move(c)) {}
  Term(const Term&) = default;
  Term(Term&&) noexcept = default;
  Term& operator=(const Term&) = default;
  Term& operator=(Term&&) noexcept = default;
};

using Point = std::map<Var, Rational>;

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: integers embed implicitly
  MultiPoly(const Rational& c);  // NOLINT
  MultiPoly(const Monomial& m, const Rational& c);

  static MultiPoly var(Var v, unsigned e = 1) { return {Monomial::of(v, e), Rational(1)}; }
  /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term (zero if absent).
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }
  bool is_homogeneous() const;

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  MultiPoly coefficient(Var v, unsigned k) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
  friend bool operator==(const MultiPoly& p, const MultiPoly& q);
  friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

  MultiPoly pow(unsigned e) const;

  /// Exact quotient; throws std::domain_error when `d` does not divide `*this`.
  MultiPoly divide_exact(const MultiPoly& d) const;

  /// Exact evaluation; throws std::invalid_argument for an unassigned variable.
  Rational eval(const Point& point) const;
  /// Replaces `v` by `value`.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  /// Replaces every variable in `values` by the given constant.
  MultiPoly specialize(const Point& values) const;

  /// Dense coefficient list (index = exponent) of a polynomial in `v` alone.
  std::vector<Rational> univariate_coefficients(Var v) const;
  static MultiPoly from_univariate(Var v, const std::vector<Rational>& coeffs);

  /// Canonical text form, e.g. `x^2 - uu*ud`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const Rational& r);

// Modular fingerprinting -----------------------------------------------------

/// 2^61 - 1, a Mersenne prime.
inline constexpr std::uint64_t kFingerprintPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t splitmix64(std::uint64_t& state);

/// Residues assigned to every variable for a given seed.
std::array<std::uint64_t, kVarCount> fingerprint_point(std::uint64_t seed);

namespace modp {
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
std::uint64_t reduce(const Rational& r);
}  // namespace modp

/// Value of `p` at `fingerprint_point(seed)` modulo kFingerprintPrime.
std::uint64_t fingerprint(const MultiPoly& p, std::uint64_t seed);

}  // namespace zetaeq
