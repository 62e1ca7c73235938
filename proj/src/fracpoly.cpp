#include "nspec/fracpoly.hpp"

#include <limits>
#include <sstream>

#include "nspec/errors.hpp"

namespace nspec {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto digits = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + text + "'");
  }
  Integer n(num[0] == '+' ? num.substr(1) : num);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return make_rational(n, d);
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac_of(const Rational& x) { return x - Rational(floor_of(x)); }

std::string rational_string(const Rational& q) { return q.get_str(); }

// --- FracPoly -------------------------------------------------------------

FracPoly FracPoly::monomial(const Rational& exponent, const Integer& coeff) {
  FracPoly p;
  p.add_term(exponent, coeff);
  return p;
}

FracPoly FracPoly::constant(const Integer& coeff) { return monomial(Rational(0), coeff); }

FracPoly FracPoly::geometric(long lo, long hi) {
  FracPoly p;
  for (long j = lo; j <= hi; ++j) p.add_term(Rational(j), 1);
  return p;
}

FracPoly FracPoly::fractional_run(long lo, long hi, long den) {
  FracPoly p;
  for (long k = lo; k <= hi; ++k) p.add_term(make_rational(k, den), 1);
  return p;
}

void FracPoly::add_term(const Rational& exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer FracPoly::coeff(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool FracPoly::has_integer_exponents() const {
  for (const auto& [e, c] : terms_) {
    if (e.get_den() != 1) return false;
  }
  return true;
}

FracPoly& FracPoly::operator+=(const FracPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

FracPoly& FracPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

FracPoly operator-(const FracPoly& a) {
  FracPoly r = a;
  return r *= Integer(-1);
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  FracPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

FracPoly FracPoly::shifted(const Rational& shift) const {
  FracPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  return r;
}

std::string FracPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "t";
    if (e != 1) {
      if (e.get_den() == 1 && e > 0) {
        os << "^" << e.get_str();
      } else {
        os << "^(" << e.get_str() << ")";
      }
    }
  }
  return os.str();
}

FracPoly reflect(const FracPoly& p, long n) {
  FracPoly r;
  Rational center(n);
  for (const auto& [e, c] : p.terms()) r.add_term(center - e, c);
  return r;
}

FracPoly phi(const FracPoly& p) {
  FracPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(frac_of(e), c);
  return r;
}

FracPoly slice_le(const FracPoly& p, const Rational& bound) {
  FracPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e > bound) break;
    r.add_term(e, c);
  }
  return r;
}

Integer mass(const FracPoly& p) {
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

// --- BivarPoly ------------------------------------------------------------

BivarPoly BivarPoly::monomial(const Rational& t_exp, long u_exp, const Integer& coeff) {
  BivarPoly b;
  b.add_term(t_exp, u_exp, coeff);
  return b;
}

BivarPoly BivarPoly::from_t(const FracPoly& p, long u_exp) {
  BivarPoly b;
  for (const auto& [e, c] : p.terms()) b.add_term(e, u_exp, c);
  return b;
}

void BivarPoly::add_term(const Rational& t_exp, long u_exp, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{t_exp, u_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

long BivarPoly::min_u_exponent() const {
  long m = std::numeric_limits<long>::max();
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

long BivarPoly::max_u_exponent() const {
  long m = std::numeric_limits<long>::min();
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    if (k.first != 0) {
      if (wrote) os << "*";
      os << "t";
      if (k.first != 1) os << "^(" << k.first.get_str() << ")";
      wrote = true;
    }
    if (k.second != 0) {
      if (wrote) os << "*";
      os << "u";
      if (k.second != 1) os << "^" << k.second;
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

BivarPoly inflate(const FracPoly& r, long k) {
  BivarPoly b;
  for (const auto& [e, c] : r.terms()) {
    if (e.get_den() != 1) {
      throw HypothesisError("inflate: non-integer exponent " + e.get_str() +
                            " in a combinatorial polynomial");
    }
    long j = e.get_num().get_si();
    b.add_term(e, k - 2 * j, c);
  }
  return b;
}

FracPoly specialize_u(const BivarPoly& b) {
  FracPoly p;
  for (const auto& [k, c] : b.terms()) p.add_term(k.first, c);
  return p;
}

namespace {

nlohmann::json integer_json(const Integer& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

}  // namespace

nlohmann::json to_json(const FracPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back({{"alpha", rational_string(e)}, {"mult", integer_json(c)}});
  }
  return arr;
}

nlohmann::json to_json(const BivarPoly& b) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, c] : b.terms()) {
    arr.push_back(
        {{"alpha", rational_string(k.first)}, {"weight", k.second}, {"mult", integer_json(c)}});
  }
  return arr;
}

FracPoly fracpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("spectrum JSON must be an array");
  FracPoly p;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("alpha") || !item.contains("mult")) {
      throw ParseError("spectrum JSON entries need \"alpha\" and \"mult\"");
    }
    Rational alpha = parse_rational(item["alpha"].get<std::string>());
    const auto& m = item["mult"];
    Integer mult = m.is_string() ? Integer(m.get<std::string>()) : Integer(m.get<long>());
    p.add_term(alpha, mult);
  }
  return p;
}

}  // namespace nspec
