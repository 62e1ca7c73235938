#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <json.hpp>

namespace nspec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p"; throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

/// Integer part [x] (floor) and fractional part {x} = x - [x] in [0, 1).
Integer floor_of(const Rational& x);
Rational frac_of(const Rational& x);

/// Finitely supported map from rational exponents to nonzero integer
/// coefficients: sum of c * t^alpha. Terms are kept ordered by exponent.
class FracPoly {
 public:
  using Terms = std::map<Rational, Integer>;

  FracPoly() = default;
  static FracPoly monomial(const Rational& exponent, const Integer& coeff = 1);
  static FracPoly constant(const Integer& coeff);
  /// sum_{j=lo}^{hi} t^j (zero when hi < lo).
  static FracPoly geometric(long lo, long hi);
  /// sum_{k=lo}^{hi} t^{k/den}.
  static FracPoly fractional_run(long lo, long hi, long den);

  void add_term(const Rational& exponent, const Integer& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(const Rational& exponent) const;
  bool has_integer_exponents() const;

  FracPoly& operator+=(const FracPoly& other);
  FracPoly& operator-=(const FracPoly& other);
  FracPoly& operator*=(const Integer& scalar);

  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend FracPoly operator-(const FracPoly& a);
  friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator*(FracPoly a, const Integer& s) { return a *= s; }
  friend FracPoly operator*(const Integer& s, FracPoly a) { return a *= s; }
  friend bool operator==(const FracPoly& a, const FracPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

  /// Multiplies by t^shift.
  FracPoly shifted(const Rational& shift) const;

  /// Human readable form, e.g. "t^(1/2) + 2*t - t^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// p(t^{-1}) * t^n: every exponent alpha becomes n - alpha.
FracPoly reflect(const FracPoly& p, long n);
/// t^alpha -> t^{alpha - [alpha]}, colliding coefficients summed.
FracPoly phi(const FracPoly& p);
/// Terms with exponent <= bound.
FracPoly slice_le(const FracPoly& p, const Rational& bound);
/// p(1), the sum of all coefficients.
Integer mass(const FracPoly& p);

/// Finitely supported map (t-exponent in Q, u-exponent in Z) -> nonzero integer.
class BivarPoly {
 public:
  using Key = std::pair<Rational, long>;
  using Terms = std::map<Key, Integer>;

  BivarPoly() = default;
  static BivarPoly monomial(const Rational& t_exp, long u_exp, const Integer& coeff = 1);
  /// Embeds p as p(t) * u^u_exp.
  static BivarPoly from_t(const FracPoly& p, long u_exp = 0);

  void add_term(const Rational& t_exp, long u_exp, const Integer& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_u_exponent() const;
  long max_u_exponent() const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const Integer& scalar);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// c t^j -> c t^j u^{k - 2j}. Requires integer exponents (HypothesisError otherwise).
BivarPoly inflate(const FracPoly& r, long k);
/// Sets u := 1.
FracPoly specialize_u(const BivarPoly& b);

/// JSON array of {"alpha":"p/q","mult":m}, ascending by exponent.
nlohmann::json to_json(const FracPoly& p);
/// JSON array of {"alpha":"p/q","weight":w,"mult":m}, ascending by (alpha, weight).
nlohmann::json to_json(const BivarPoly& b);
FracPoly fracpoly_from_json(const nlohmann::json& j);

std::string rational_string(const Rational& q);

}  // namespace nspec
