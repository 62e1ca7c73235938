#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nspec/fracpoly.hpp"

namespace nspec {

using Point = std::vector<std::int64_t>;

/// Exponent support of a polynomial germ in n <= 4 variables. Coefficients
/// are echoed back in renderings only; every computation downstream looks at
/// the point set and assumes generic (non-degenerate) coefficients.
struct Support {
  int n = 0;
  std::vector<Point> points;                 // sorted, unique
  std::map<Point, Rational> coeffs;          // one entry per point

  /// Validates and canonicalizes (sorts points, fills missing coefficients
  /// with 1). Throws ParseError on an invalid support.
  static Support make(int n, std::vector<Point> points, std::map<Point, Rational> coeffs = {});

  friend bool operator==(const Support&, const Support&) = default;
};

inline constexpr int kMaxDimension = 4;
inline constexpr std::int64_t kDefaultMaxExponent = 1000000;

/// Exponent cap from NSPEC_MAX_EXP, or kDefaultMaxExponent.
std::int64_t max_exponent_from_env();

/// Parses "x^4*y^2 + x^2*y^3"-style text. Variables are x, y, z, w or x1..x9
/// (x = x1, y = x2, z = x3, w = x4); n is the highest variable index used.
Support parse_polynomial(const std::string& text, std::int64_t max_exponent = max_exponent_from_env());

/// Canonical text form; parse_polynomial(render(s)) == s.
std::string render(const Support& s);

/// {"n":3,"support":[[4,0,0],...]} with optional "coeffs":["p/q",...].
Support support_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Support& s);

/// Reads either a JSON support or polynomial text.
Support parse_input(const std::string& text);

}  // namespace nspec
