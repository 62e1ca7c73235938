#include "nspec/polyparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "nspec/errors.hpp"

namespace nspec {

Support Support::make(int n, std::vector<Point> points, std::map<Point, Rational> coeffs) {
  if (n < 1 || n > kMaxDimension) {
    throw ParseError("dimension " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxDimension) + "]");
  }
  if (points.empty()) throw ParseError("empty support");
  std::set<Point> seen;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) {
      throw ParseError("exponent vector of length " + std::to_string(p.size()) +
                       " in a support of dimension " + std::to_string(n));
    }
    bool all_zero = true;
    for (auto v : p) {
      if (v < 0) throw ParseError("negative exponent in support");
      if (v != 0) all_zero = false;
    }
    if (all_zero) throw ParseError("support contains the origin (f(0) != 0)");
    if (!seen.insert(p).second) throw ParseError("duplicate support point");
  }
  Support s;
  s.n = n;
  s.points.assign(seen.begin(), seen.end());
  for (const auto& p : s.points) {
    auto it = coeffs.find(p);
    Rational c = it == coeffs.end() ? Rational(1) : it->second;
    if (c == 0) throw ParseError("zero coefficient in support");
    s.coeffs.emplace(p, c);
  }
  return s;
}

std::int64_t max_exponent_from_env() {
  if (const char* env = std::getenv("NSPEC_MAX_EXP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxExponent;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::int64_t max_exp) : text_(text), max_exp_(max_exp) {}

  Support run() {
    std::map<std::vector<std::int64_t>, Rational> terms;
    int n = 0;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      auto [coeff, exps] = term();
      if (negative) coeff = -coeff;
      n = std::max<int>(n, static_cast<int>(exps.size()));
      terms[exps] += coeff;
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    std::vector<Point> points;
    std::map<Point, Rational> coeffs;
    for (auto& [exps, c] : terms) {
      if (c == 0) continue;
      // Keys end in a nonzero entry, so padding keeps them distinct.
      Point p = exps;
      p.resize(n, 0);
      points.push_back(p);
      coeffs.emplace(p, c);
    }
    if (points.empty()) throw ParseError("zero polynomial");
    if (n > kMaxDimension) {
      throw ParseError("dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxDimension));
    }
    return Support::make(n, std::move(points), std::move(coeffs));
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError("syntax error: " + what, pos_); }

  Integer digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(text_.substr(start, pos_ - start));
  }

  std::pair<Rational, std::vector<std::int64_t>> term() {
    Rational coeff = 1;
    std::vector<std::int64_t> exps;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      coeff = make_rational(num, den);
      if (peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
    }
    factor(exps);
    while (peek() == '*') {
      ++pos_;
      factor(exps);
    }
    return {coeff, exps};
  }

  void factor(std::vector<std::int64_t>& exps) {
    int index = variable();
    std::int64_t e = 1;
    if (peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      Integer v = digits();
      if (v == 0) throw ParseError("syntax error: exponent must be positive", at);
      if (v > max_exp_) throw ParseError("exponent exceeds bound " + std::to_string(max_exp_), at);
      e = v.get_si();
    }
    if (static_cast<int>(exps.size()) < index) exps.resize(index, 0);
    exps[index - 1] += e;
    if (exps[index - 1] > max_exp_) {
      throw ParseError("exponent exceeds bound " + std::to_string(max_exp_), pos_);
    }
  }

  int variable() {
    char c = peek();
    switch (c) {
      case 'x': {
        ++pos_;
        if (pos_ < text_.size() && text_[pos_] >= '1' && text_[pos_] <= '9') {
          return text_[pos_++] - '0';
        }
        return 1;
      }
      case 'y':
        ++pos_;
        return 2;
      case 'z':
        ++pos_;
        return 3;
      case 'w':
        ++pos_;
        return 4;
      default:
        fail("expected a variable");
    }
  }

  const std::string& text_;
  std::int64_t max_exp_;
  std::size_t pos_ = 0;
};

}  // namespace

Support parse_polynomial(const std::string& text, std::int64_t max_exponent) {
  return Parser(text, max_exponent).run();
}

std::string render(const Support& s) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::ostringstream os;
  bool first = true;
  for (auto it = s.points.rbegin(); it != s.points.rend(); ++it) {
    const Point& p = *it;
    Rational c = s.coeffs.at(p);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    bool first_factor = true;
    for (int i = 0; i < s.n; ++i) {
      if (p[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << names[i];
      if (p[i] != 1) os << "^" << p[i];
    }
  }
  return os.str();
}

Support support_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("support")) {
    throw ParseError("JSON support needs \"n\" and \"support\"");
  }
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  int n = j["n"].get<int>();
  const auto& pts = j["support"];
  if (!pts.is_array()) throw ParseError("\"support\" must be an array");
  std::int64_t cap = max_exponent_from_env();
  std::vector<Point> points;
  for (const auto& row : pts) {
    if (!row.is_array()) throw ParseError("support entries must be arrays");
    Point p;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("support coordinates must be integers");
      auto x = v.get<std::int64_t>();
      if (x > cap) throw ParseError("exponent exceeds bound " + std::to_string(cap));
      p.push_back(x);
    }
    points.push_back(std::move(p));
  }
  std::map<Point, Rational> coeffs;
  if (j.contains("coeffs")) {
    const auto& cs = j["coeffs"];
    if (!cs.is_array() || cs.size() != points.size()) {
      throw ParseError("\"coeffs\" must be an array parallel to \"support\"");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& c = cs[i];
      Rational q = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
      coeffs[points[i]] = q;
    }
  }
  return Support::make(n, std::move(points), std::move(coeffs));
}

nlohmann::json to_json(const Support& s) {
  nlohmann::json pts = nlohmann::json::array();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& p : s.points) {
    pts.push_back(p);
    cs.push_back(rational_string(s.coeffs.at(p)));
  }
  return {{"n", s.n}, {"support", pts}, {"coeffs", cs}};
}

Support parse_input(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return support_from_json(j);
  }
  return parse_polynomial(text);
}

}  // namespace nspec
