#include "nspec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nspec/corpus.hpp"
#include "nspec/errors.hpp"
#include "nspec/facepoly.hpp"
#include "nspec/hodge.hpp"
#include "nspec/newton.hpp"
#include "nspec/pairs.hpp"
#include "nspec/spectrum.hpp"
#include "nspec/zeta.hpp"

namespace nspec {

using nlohmann::json;

namespace {

const std::map<std::string, Command, std::less<>> kCommands = {
    {"spectrum", Command::spectrum}, {"hodge", Command::hodge}, {"zeta", Command::zeta},
    {"pairs", Command::pairs},       {"check", Command::check}, {"random", Command::random},
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string axes_string(const std::vector<int>& axes) {
  std::string s = "{";
  for (std::size_t i = 0; i < axes.size(); ++i) s += (i ? "," : "") + std::to_string(axes[i]);
  return s + "}";
}

// Exception types map to exit codes; anything unexpected counts as an
// internal failure.
struct ErrorInfo {
  int code;
  const char* kind;
  std::string message;
};

ErrorInfo classify(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const HypothesisError& ex) {
    return {1, "hypothesis", ex.what()};
  } catch (const ParseError& ex) {
    return {2, "parse", ex.what()};
  } catch (const InvariantError& ex) {
    return {3, "invariant", ex.what()};
  } catch (const std::exception& ex) {
    return {3, "internal", ex.what()};
  }
}

std::string read_input(const RunConfig& cfg) {
  if (!cfg.input_is_path) return cfg.input;
  std::ifstream in(cfg.input);
  if (!in) throw ParseError("cannot read input file " + cfg.input);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json zeta_status_json(const ZetaCheck& z) {
  return {{"ok", z.ok}, {"phi_spectrum", to_json(phi(z.spectrum))}, {"m", to_json(z.m)},
          {"discrepancy", to_json(z.discrepancy)}};
}

RunResult cmd_spectrum(const Support& s) {
  NewtonPolyhedron P(s);
  FaceTable T(P);
  SpectrumReport rep = isolated_spectrum(T);
  ZetaCheck z = compare_zeta(rep.sp, s);
  RunResult r;
  r.report = {{"gamma_spectrum", to_json(rep.gamma_sp)},
              {"defect", to_json(rep.defect)},
              {"spectrum", to_json(rep.sp)},
              {"spectrum_steenbrink", to_json(rep.sp_steenbrink)},
              {"mu", integer_json(rep.mu)},
              {"routes_agree", rep.sp == rep.sp_steenbrink},
              {"route_notes", rep.route_notes},
              {"zeta_identity", zeta_status_json(z)}};
  std::ostringstream os;
  os << "gamma-spectrum: " << rep.gamma_sp.to_string() << "\n"
     << "defect:         " << rep.defect.to_string() << "\n"
     << "spectrum:       " << rep.sp.to_string() << "\n"
     << "steenbrink:     " << rep.sp_steenbrink.to_string() << "\n"
     << "mu:             " << rep.mu.get_str() << "\n"
     << "zeta identity:  " << (z.ok ? "ok" : "FAILED (" + z.discrepancy.to_string() + ")") << "\n";
  r.text = os.str();
  if (!z.ok) r.exit_code = 3;
  return r;
}

RunResult cmd_hodge(const Support& s) {
  RunResult r;
  std::ostringstream os;
  if (axis_gaps(s).empty()) {
    NewtonPolyhedron P(s);
    FaceTable T(P);
    SpectrumReport rep = isolated_spectrum(T);
    r.report = {{"method", "isolated"}, {"spectrum", to_json(rep.sp)}, {"mu", integer_json(rep.mu)}};
    os << "isolated germ, Hodge spectrum = spectrum\n"
       << "spectrum: " << rep.sp.to_string() << "\n";
    r.text = os.str();
    return r;
  }
  HodgeResult h;
  if (s.n == 3) {
    h = hodge_spectrum_theorem2(s);
    r.report["method"] = "surface";
    r.report["r"] = h.r;
  } else if (s.n == 2) {
    h.sp_prime = hodge_spectrum(s);
    r.report["method"] = "plane";
  } else {
    throw HypothesisError("Hodge spectrum formulas need n = 2 or 3");
  }
  r.report["spectrum"] = to_json(h.sp_prime);
  r.report["warnings"] = h.warnings;
  os << "Hodge spectrum: " << h.sp_prime.to_string() << "\n";
  for (const auto& w : h.warnings) os << "warning: " << w << "\n";
  try {
    YomdinCheck c = crosscheck_yomdin(s);
    r.report["yomdin_crosscheck"] = {{"ok", c.ok},
                                     {"r1", c.r1},
                                     {"r2", c.r2},
                                     {"difference_r1", to_json(c.diff1)},
                                     {"difference_r2", to_json(c.diff2)}};
    os << "Yomdin cross-check at r = " << c.r1 << ", " << c.r2 << ": " << (c.ok ? "ok" : "FAILED") << "\n";
    if (!c.ok) {
      os << "  Sp(f + l^r1) - yomdin = " << c.diff1.to_string() << "\n"
         << "  Sp(f + l^r2) - yomdin = " << c.diff2.to_string() << "\n";
      r.exit_code = 3;
    }
  } catch (const HypothesisError& e) {
    r.report["yomdin_crosscheck"] = {{"ok", nullptr}, {"not_applicable", e.what()}};
    os << "Yomdin cross-check not applicable: " << e.what() << "\n";
  }
  r.text = os.str();
  return r;
}

RunResult cmd_zeta(const Support& s) {
  ZetaReport z = mzeta(s);
  RunResult r;
  json by_subset = json::array();
  std::ostringstream os;
  for (const auto& [axes, m] : z.mstar_by_subset) {
    by_subset.push_back({{"axes", axes}, {"mstar", to_json(m)}});
    os << "M*" << axes_string(axes) << " = " << m.to_string() << "\n";
  }
  r.report = {{"mstar", by_subset}, {"m", to_json(z.m)}};
  os << "M = " << z.m.to_string() << "\n";
  if (s.n <= 3) {
    try {
      ZetaCheck c = verify_zeta_identity(s);
      r.report["zeta_identity"] = zeta_status_json(c);
      os << "phi(spectrum) = M: " << (c.ok ? "ok" : "FAILED") << "\n";
      if (!c.ok) r.exit_code = 3;
    } catch (const HypothesisError& e) {
      r.report["zeta_identity"] = {{"ok", nullptr}, {"not_applicable", e.what()}};
    }
  }
  r.text = os.str();
  return r;
}

json jordan_json(const FaceTable& T, std::ostringstream& os) {
  json j;
  try {
    JordanCounts jc = jordan_counts(T);
    json classes = json::array();
    for (const EigenClass& c : eigen_classes(T)) {
      Integer n3 = jc.n3.count(c) ? jc.n3.at(c) : Integer(0);
      Integer n2 = jc.n2.count(c) ? jc.n2.at(c) : Integer(0);
      Integer via_q = jordan_counts_via_q(T, c);
      classes.push_back({{"l", rational_string(c.l)},
                         {"n3", integer_json(n3)},
                         {"n2", integer_json(n2)},
                         {"n2_via_q", integer_json(via_q)}});
      os << "lambda = exp(2 pi i " << rational_string(c.l) << "): n3 = " << n3.get_str()
         << ", n2 = " << n2.get_str() << ", n2 via q = " << via_q.get_str() << "\n";
    }
    j["classes"] = classes;
    j["n2_unipotent"] = integer_json(jc.n2_unipotent);
    os << "unipotent size-2 blocks: " << jc.n2_unipotent.get_str() << "\n";
    json findings = json::array();
    for (const auto& f : jordan_consistency(T)) {
      findings.push_back({{"l", rational_string(f.lambda.l)},
                          {"from_faces", integer_json(f.from_faces)},
                          {"from_q", integer_json(f.from_q)}});
      os << "conjecture finding at l = " << rational_string(f.lambda.l) << ": " << f.from_faces.get_str()
         << " from faces, " << f.from_q.get_str() << " from q\n";
    }
    j["findings"] = findings;
  } catch (const InvariantError& e) {
    j["findings"] = json::array({{{"message", e.what()}}});
    os << e.what() << "\n";
  }
  return j;
}

RunResult cmd_pairs(const Support& s) {
  NewtonPolyhedron P(s);
  FaceTable T(P);
  BivarPoly a = pairs_conjectural(T);
  BivarPoly b = pairs_steenbrink(T);
  RunResult r;
  std::ostringstream os;
  os << "pairs (interior faces): " << a.to_string() << "\n"
     << "pairs (Steenbrink):     " << b.to_string() << "\n"
     << "equal: " << (a == b ? "yes" : "NO") << "\n";
  r.report = {{"pairs_conjectural", to_json(a)}, {"pairs_steenbrink", to_json(b)}, {"equal", a == b}};
  r.report["jordan"] = jordan_json(T, os);
  r.text = os.str();
  if (a != b) r.exit_code = 3;
  return r;
}

RunResult cmd_check(const Support& s) {
  RunResult r;
  json list = json::array();
  std::map<std::string, int> tally;
  std::ostringstream os;
  for (const CheckResult& c : run_checks(s)) {
    list.push_back(to_json(c));
    ++tally[status_name(c.status)];
    os << status_name(c.status) << " " << c.id;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    if (c.status == CheckStatus::fail) r.exit_code = 3;
  }
  r.report = {{"checks", list}, {"summary", tally}};
  r.text = os.str();
  return r;
}

RunResult cmd_random(const RunConfig& cfg) {
  if (!cfg.seed || !cfg.count) throw ParseError("random needs --seed and --count");
  if (*cfg.count < 1) throw ParseError("--count must be at least 1");
  RunResult r;
  json list = json::array();
  std::ostringstream os;
  for (const Support& s : generate_corpus(*cfg.seed, *cfg.count)) {
    list.push_back(to_json(s));
    os << render(s) << "\n";
  }
  r.report = {{"seed", *cfg.seed}, {"count", *cfg.count}, {"supports", list}};
  r.text = os.str();
  return r;
}

// ---- invariant suites ----

class Suite {
 public:
  // fn returns an empty string on success and a failure description
  // otherwise; a HypothesisError marks the check as skipped.
  void add(const std::string& id, const std::function<std::string()>& fn) {
    CheckResult c{id, CheckStatus::pass, ""};
    try {
      c.detail = fn();
      if (!c.detail.empty()) c.status = CheckStatus::fail;
    } catch (const HypothesisError& e) {
      c.status = CheckStatus::skipped;
      c.detail = e.what();
    } catch (const std::exception& e) {
      c.status = CheckStatus::fail;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  void skip(const std::string& id, const std::string& why) { out.push_back({id, CheckStatus::skipped, why}); }
  void finding(const std::string& id, const std::string& what) { out.push_back({id, CheckStatus::finding, what}); }

  std::vector<CheckResult> out;
};

std::string mismatch(const FracPoly& got, const FracPoly& want) {
  if (got == want) return "";
  return got.to_string() + " != " + want.to_string();
}

// Reorders the terms of a rendering and spaces them out.
std::string shuffle_terms(const std::string& text) {
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : text) {
    if ((ch == '+' || ch == '-') && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) terms.push_back(cur);
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string t = *it;
    char sign = '+';
    if (t[0] == '+' || t[0] == '-') {
      sign = t[0];
      t = t.substr(1);
    }
    if (!out.empty() || sign == '-') out += std::string(" ") + sign + " ";
    for (char ch : t) {
      out += ch;
      if (ch == '*') out += ' ';
    }
  }
  return out;
}

void parse_checks(Suite& suite, const Support& s) {
  suite.add("parse_render_round_trip", [&]() -> std::string {
    bool top_used = std::any_of(s.points.begin(), s.points.end(), [&](const Point& p) { return p[s.n - 1] != 0; });
    if (!top_used) throw HypothesisError("the last variable does not occur in the support");
    Support back = parse_polynomial(render(s));
    return back == s ? "" : render(back) + " != " + render(s);
  });
  suite.add("parse_term_order", [&]() -> std::string {
    bool top_used = std::any_of(s.points.begin(), s.points.end(), [&](const Point& p) { return p[s.n - 1] != 0; });
    if (!top_used) throw HypothesisError("the last variable does not occur in the support");
    std::string shuffled = shuffle_terms(render(s));
    return parse_polynomial(shuffled) == s ? "" : "reordered text \"" + shuffled + "\" parses differently";
  });
}

void newton_checks(Suite& suite, const Support& s, const NewtonPolyhedron& P) {
  suite.add("face_lattice_graded", [&]() -> std::string {
    std::set<std::uint64_t> masks;
    for (const Face& f : P.faces()) {
      if (!masks.insert(f.generators).second) return "two faces share generators, face " + std::to_string(f.id);
      if (f.dim < 1) continue;
      bool has_sub = false;
      for (const Face& g : P.faces()) {
        if (g.dim == f.dim - 1 && P.contains(f, g)) has_sub = true;
      }
      if (!has_sub) return "face " + std::to_string(f.id) + " contains no face of dimension " + std::to_string(f.dim - 1);
    }
    return "";
  });
  suite.add("facet_inequalities", [&]() -> std::string {
    for (const Facet& F : P.facets()) {
      bool attained = false;
      for (const Point& p : s.points) {
        std::int64_t v = 0;
        for (int i = 0; i < s.n; ++i) v += F.normal[i] * p[i];
        if (v < F.offset) return "support point violates a facet inequality";
        attained = attained || v == F.offset;
      }
      if (!attained) return "facet offset not attained on the support";
    }
    return "";
  });
  suite.add("support_order_independence", [&]() -> std::string {
    std::vector<Point> rev(s.points.rbegin(), s.points.rend());
    NewtonPolyhedron Q(Support::make(s.n, rev, s.coeffs));
    return Q.to_json() == P.to_json() ? "" : "polyhedron depends on the order of the support points";
  });
  suite.add("vertex_normal_witness", [&]() -> std::string {
    // Each vertex minimizes the sum of the normals of its facets uniquely;
    // no other support point is such a unique minimizer.
    std::set<Point> vertices(P.vertices().begin(), P.vertices().end());
    for (const Point& v : P.vertices()) {
      Point w(s.n, 0);
      for (const Facet& F : P.facets()) {
        std::int64_t val = 0;
        for (int i = 0; i < s.n; ++i) val += F.normal[i] * v[i];
        if (val == F.offset) {
          for (int i = 0; i < s.n; ++i) w[i] += F.normal[i];
        }
      }
      std::int64_t best = 0;
      int hits = 0;
      bool first = true;
      for (const Point& p : s.points) {
        std::int64_t val = 0;
        for (int i = 0; i < s.n; ++i) val += w[i] * p[i];
        if (first || val < best) {
          best = val;
          hits = 0;
          first = false;
        }
        if (val == best) ++hits;
      }
      std::int64_t at_v = 0;
      for (int i = 0; i < s.n; ++i) at_v += w[i] * v[i];
      if (hits != 1 || at_v != best) return "vertex is not the unique minimizer of its normal cone";
    }
    return "";
  });
  suite.add("vertex_gamma_at_least_3", [&]() -> std::string {
    if (P.n() != 3) throw HypothesisError("needs n = 3");
    for (const Face* v : P.faces_of_dim(0)) {
      if (P.vertex_gamma(*v) < 3) return "a vertex lies on fewer than three 2-faces";
    }
    return "";
  });
}

void face_checks(Suite& suite, const NewtonPolyhedron& P, const FaceTable& T) {
  auto compact = P.compact_faces(true);
  suite.add("qhat_face_sum", [&]() -> std::string {
    for (const Face* sigma : compact) {
      FracPoly sum;
      for (const Face* tau : compact) {
        if (P.contains(*sigma, *tau)) sum += T[*tau].q;
      }
      if (auto m = mismatch(T[*sigma].qhat, sum); !m.empty()) return "face " + std::to_string(sigma->id) + ": " + m;
    }
    return "";
  });
  suite.add("facet_s_phi_sum", [&]() -> std::string {
    for (const Face* sigma : P.faces_of_dim(P.n() - 1, FaceFilter::compact)) {
      FracPoly sum;
      for (const Face* tau : compact) {
        if (P.contains(*sigma, *tau)) sum += phi(T[*tau].q);
      }
      if (auto m = mismatch(T[*sigma].s, sum); !m.empty()) return "face " + std::to_string(sigma->id) + ": " + m;
    }
    return "";
  });
  suite.add("q_reflection_symmetry", [&]() -> std::string {
    for (const Face* sigma : compact) {
      if (auto m = mismatch(reflect(T[*sigma].q, sigma->dim + 1), T[*sigma].q); !m.empty()) {
        return "face " + std::to_string(sigma->id) + ": " + m;
      }
    }
    return "";
  });
  suite.add("facet_qhat_mass", [&]() -> std::string {
    for (const Face* sigma : P.faces_of_dim(P.n() - 1, FaceFilter::compact)) {
      const FaceInvariants& inv = T[*sigma];
      if (mass(inv.qhat) != inv.det) return "mass of qhat differs from det on face " + std::to_string(sigma->id);
      if (inv.mu <= 0 || inv.mu * inv.delta != inv.det) return "mu is not det / delta on face " + std::to_string(sigma->id);
    }
    return "";
  });
}

void spectrum_checks(Suite& suite, const Support& s, const FaceTable& T, const SpectrumReport& rep) {
  const long n = s.n;
  suite.add("gamma_symmetry", [&] { return mismatch(reflect(rep.gamma_sp, n), rep.gamma_sp); });
  suite.add("agreement_below_1", [&] { return mismatch(slice_le(rep.sp, 1), slice_le(rep.gamma_sp, 1)); });
  suite.add("defect_window", [&]() -> std::string {
    FracPoly defect = rep.sp - rep.gamma_sp;
    for (const auto& [a, c] : defect.terms()) {
      if (!(a > 1 && a < n - 1)) return "defect exponent " + rational_string(a) + " outside (1, n-1)";
    }
    return "";
  });
  suite.add("route_agreement", [&] { return mismatch(rep.sp, spectrum_steenbrink(T)); });
  suite.add("spectrum_symmetry", [&] { return mismatch(reflect(rep.sp, n), rep.sp); });
  suite.add("spectrum_range", [&]() -> std::string {
    for (const auto& [a, c] : rep.sp.terms()) {
      if (a <= 0 || a >= n) return "exponent " + rational_string(a) + " outside (0, n)";
      if (c <= 0) return "nonpositive multiplicity at " + rational_string(a);
    }
    return "";
  });
  suite.add("zeta_identity", [&]() -> std::string {
    ZetaCheck z = compare_zeta(rep.sp, s);
    return z.ok ? "" : "phi(spectrum) - M = " + z.discrepancy.to_string();
  });
  suite.add("zeta_mass", [&]() -> std::string {
    Integer m = mass(mzeta(s).m);
    return m == rep.mu ? "" : "mass of M is " + m.get_str() + ", mu is " + rep.mu.get_str();
  });
  suite.add("zeta_exponents_unit_interval", [&]() -> std::string {
    FracPoly m = mzeta(s).m;
    for (const auto& [a, c] : m.terms()) {
      if (a < 0 || a >= 1) return "exponent " + rational_string(a) + " outside [0, 1)";
    }
    return "";
  });
}

void pairs_checks(Suite& suite, const NewtonPolyhedron& P, const FaceTable& T, const SpectrumReport& rep) {
  if (P.n() != 3) {
    for (const char* id : {"pairs_routes_agree", "pairs_specialize", "pairs_weight_range", "pairs_weight_ladder",
                           "jordan_consistency", "jordan_mass_bound"}) {
      suite.skip(id, "needs n = 3");
    }
    return;
  }
  BivarPoly a = pairs_conjectural(T);
  suite.add("pairs_routes_agree", [&]() -> std::string {
    BivarPoly b = pairs_steenbrink(T);
    return a == b ? "" : a.to_string() + " != " + b.to_string();
  });
  suite.add("pairs_specialize", [&] { return mismatch(specialize_u(a), rep.sp); });
  suite.add("pairs_weight_range", [&]() -> std::string {
    if (a.is_zero()) return "";
    if (a.min_u_exponent() < 0 || a.max_u_exponent() > 4) return "weight outside [0, 4]";
    return "";
  });
  suite.add("pairs_weight_ladder", [&]() -> std::string {
    // r_tau = 1 + ... + t^{c-1} on interior compact faces, plus (gamma - 3) t at vertices.
    auto r = combinatorial_polynomials(P);
    for (const Face* tau : P.compact_faces(false)) {
      if (!tau->interior) continue;
      FracPoly want = FracPoly::geometric(0, P.n() - tau->dim - 1);
      if (tau->dim == 0) want += FracPoly::monomial(1, P.vertex_gamma(*tau) - 3);
      if (auto m = mismatch(r.at(tau->id), want); !m.empty()) return "face " + std::to_string(tau->id) + ": " + m;
    }
    return "";
  });
  try {
    auto findings = jordan_consistency(T);
    if (findings.empty()) {
      suite.out.push_back({"jordan_consistency", CheckStatus::pass, ""});
    } else {
      std::string what;
      for (const auto& f : findings) {
        what += (what.empty() ? "" : "; ") + std::string("l = ") + rational_string(f.lambda.l) + ": " +
                f.from_faces.get_str() + " from faces, " + f.from_q.get_str() + " from q";
      }
      suite.finding("jordan_consistency", what);
    }
  } catch (const InvariantError& e) {
    suite.finding("jordan_consistency", e.what());
  }
  suite.add("jordan_mass_bound", [&]() -> std::string {
    JordanCounts jc = jordan_counts(T);
    Integer total = 2 * jc.n2_unipotent;
    for (const auto& [c, v] : jc.n3) total += 3 * v;
    for (const auto& [c, v] : jc.n2) total += 2 * v;
    return total <= rep.mu ? "" : "Jordan blocks account for " + total.get_str() + " > mu";
  });
}

void hodge_checks(Suite& suite, const Support& s) {
  if (s.n == 3) {
    auto failed = surface_hodge_hypotheses(s);
    if (!failed.empty()) {
      std::string why;
      for (const auto& f : failed) why += (why.empty() ? "" : "; ") + f;
      for (const char* id : {"augment_stable", "mu_linearity", "yomdin_crosscheck"}) suite.skip(id, why);
      return;
    }
    suite.add("augment_stable", [&]() -> std::string {
      AugmentedData A = augment(s);
      NewtonPolyhedron P(s);
      AugmentedData B = augment_at(s, P, 2 * A.r);
      if (A.gamma_tilde != B.gamma_tilde || A.gamma_tilde_new != B.gamma_tilde_new || A.bcf != B.bcf) {
        return "augmented data at r = " + std::to_string(A.r) + " and 2r differ";
      }
      return "";
    });
  } else if (s.n != 2) {
    for (const char* id : {"mu_linearity", "yomdin_crosscheck"}) suite.skip(id, "needs n = 2 or 3");
    return;
  }
  YomdinCheck c;
  try {
    c = crosscheck_yomdin(s);
  } catch (const HypothesisError& e) {
    for (const char* id : {"mu_linearity", "yomdin_crosscheck"}) suite.skip(id, e.what());
    return;
  } catch (const std::exception& e) {
    for (const char* id : {"mu_linearity", "yomdin_crosscheck"}) suite.out.push_back({id, CheckStatus::fail, e.what()});
    return;
  }
  suite.add("mu_linearity", [&]() -> std::string {
    Integer slope = 0;
    for (const SliceData& d : slice_spectra(s)) slope += d.mu;
    Integer lhs = mass(augmented_spectrum(s, c.r1)) - mass(augmented_spectrum(s, c.r2));
    Integer rhs = slope * Integer(c.r1 - c.r2);
    return lhs == rhs ? "" : "mu difference " + lhs.get_str() + ", expected " + rhs.get_str();
  });
  suite.add("yomdin_crosscheck", [&]() -> std::string {
    if (c.ok) return "";
    return "Sp(f + l^r) - yomdin at r = " + std::to_string(c.r1) + ": " + c.diff1.to_string() + "; at r = " +
           std::to_string(c.r2) + ": " + c.diff2.to_string() + "; expected " + c.expected.to_string();
  });
}

void fracpoly_checks(Suite& suite, const FracPoly& p, const FracPoly& q) {
  suite.add("fracpoly_ring_laws", [&]() -> std::string {
    FracPoly r = one_minus_t_pow(2) + FracPoly::monomial(make_rational(1, 3), 2);
    if (p * q != q * p) return "multiplication is not commutative";
    if ((p * q) * r != p * (q * r)) return "multiplication is not associative";
    if (p * (q + r) != p * q + p * r) return "distributivity fails";
    if (p * FracPoly::constant(1) != p || p + FracPoly() != p) return "units fail";
    if (mass(p * q) != mass(p) * mass(q)) return "mass is not multiplicative";
    return "";
  });
  suite.add("reflect_involution", [&]() -> std::string {
    if (reflect(reflect(p, 3), 3) != p) return "reflect is not an involution";
    if (reflect(p + q, 3) != reflect(p, 3) + reflect(q, 3)) return "reflect is not additive";
    return "";
  });
  suite.add("phi_integer_shift", [&]() -> std::string {
    for (long k : {1L, 2L, -1L}) {
      if (phi(p + q.shifted(k)) != phi(p) + phi(q)) return "phi changes under a shift by t^" + std::to_string(k);
    }
    return "";
  });
  suite.add("inflate_specialize", [&]() -> std::string {
    FracPoly r = one_minus_t_pow(3) + FracPoly::monomial(1, 4);
    return mismatch(specialize_u(inflate(r, 5)), r);
  });
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  auto it = kCommands.find(name);
  if (it == kCommands.end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
    case CheckStatus::finding: return "FINDING";
  }
  return "?";
}

json to_json(const CheckResult& c) {
  return {{"id", c.id}, {"status", status_name(c.status)}, {"detail", c.detail}};
}

std::vector<CheckResult> run_checks(const Support& s) {
  Suite suite;
  parse_checks(suite, s);
  NewtonPolyhedron P(s);
  newton_checks(suite, s, P);

  const std::vector<std::string> face_ids = {"qhat_face_sum", "facet_s_phi_sum", "q_reflection_symmetry",
                                             "facet_qhat_mass"};
  const std::vector<std::string> isolated_ids = {
      "gamma_symmetry", "agreement_below_1", "defect_window", "route_agreement",   "spectrum_symmetry",
      "spectrum_range", "zeta_identity",     "zeta_mass",     "zeta_exponents_unit_interval",
      "pairs_routes_agree", "pairs_specialize", "pairs_weight_range", "pairs_weight_ladder",
      "jordan_consistency", "jordan_mass_bound"};

  std::optional<FaceTable> T;
  try {
    T.emplace(P);
  } catch (const HypothesisError& e) {
    for (const auto& id : face_ids) suite.skip(id, e.what());
    for (const auto& id : isolated_ids) suite.skip(id, e.what());
  }

  FracPoly sample = FracPoly::monomial(make_rational(1, 2)) + FracPoly::monomial(2, 3);
  FracPoly other = FracPoly::monomial(make_rational(2, 3), -1) + FracPoly::constant(1);
  if (T) {
    face_checks(suite, P, *T);
    const bool isolated = P.is_convenient() && s.n <= 3;
    if (!isolated) {
      std::string why = s.n > 3 ? "spectrum formulas need n <= 3" : "Newton polyhedron is not convenient";
      for (const auto& id : isolated_ids) suite.skip(id, why);
    } else {
      std::optional<SpectrumReport> rep;
      try {
        rep = isolated_spectrum(*T);
      } catch (const std::exception& e) {
        for (const auto& id : isolated_ids) suite.out.push_back({id, CheckStatus::fail, e.what()});
      }
      if (rep) {
        spectrum_checks(suite, s, *T, *rep);
        pairs_checks(suite, P, *T, *rep);
        sample = rep->sp;
        other = rep->gamma_sp;
      }
    }
  }
  if (axis_gaps(s).empty()) {
    for (const char* id : {"augment_stable", "mu_linearity", "yomdin_crosscheck"}) {
      suite.skip(id, "support meets every coordinate axis (isolated case)");
    }
  } else {
    hodge_checks(suite, s);
  }
  fracpoly_checks(suite, sample, other);
  return suite.out;
}

RunResult run(const RunConfig& cfg) {
  RunResult r;
  try {
    if (cfg.command == Command::random) {
      r = cmd_random(cfg);
    } else {
      Support s = parse_input(read_input(cfg));
      switch (cfg.command) {
        case Command::spectrum: r = cmd_spectrum(s); break;
        case Command::hodge: r = cmd_hodge(s); break;
        case Command::zeta: r = cmd_zeta(s); break;
        case Command::pairs: r = cmd_pairs(s); break;
        case Command::check: r = cmd_check(s); break;
        case Command::random: break;
      }
      r.report["input"] = render(s);
      r.report["n"] = s.n;
    }
  } catch (...) {
    ErrorInfo e = classify(std::current_exception());
    r = RunResult{};
    r.exit_code = e.code;
    r.report = {{"error", {{"kind", e.kind}, {"message", e.message}}}};
    r.text = std::string("error (") + e.kind + "): " + e.message + "\n";
  }
  r.report["command"] = command_name(cfg.command);
  r.report["exit_code"] = r.exit_code;
  return r;
}

}  // namespace nspec
