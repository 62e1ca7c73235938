#include "nspec/hodge.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "nspec/errors.hpp"
#include "nspec/facepoly.hpp"
#include "nspec/lattice.hpp"
#include "nspec/spectrum.hpp"

namespace nspec {

namespace {

constexpr int kMaxDoublings = 12;

const char* axis_name(int i) {
  static const char* names[] = {"x", "y", "z", "w"};
  return names[i];
}

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

long initial_r(const Support& s) {
  std::int64_t best = 0;
  for (const auto& p : s.points) {
    std::int64_t sum = 0;
    for (auto x : p) sum += x;
    best = std::max(best, sum);
  }
  return 1 + 3 * best;
}

void require_hypotheses(const Support& s) {
  auto failed = surface_hodge_hypotheses(s);
  if (failed.empty()) return;
  std::string msg;
  for (const auto& f : failed) msg += (msg.empty() ? "" : "; ") + f;
  throw HypothesisError(msg);
}

// The single nonzero axis of r e_i, or -1.
int axial_index(const Point& p) {
  int axis = -1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (axis >= 0) return -1;
    axis = static_cast<int>(i);
  }
  return axis;
}

}  // namespace

std::vector<std::string> surface_hodge_hypotheses(const Support& s) {
  std::vector<std::string> failed;
  if (s.n != 3) {
    failed.push_back("n = 3 is required, got n = " + std::to_string(s.n));
    return failed;
  }
  NewtonPolyhedron P(s);
  if (!P.is_simplicial()) failed.push_back("Newton polyhedron is not simplicial");
  if (axis_gaps(s).empty()) failed.push_back("support meets every coordinate axis (isolated case)");
  for (int k = 0; k < 3; ++k) {
    bool met = std::any_of(s.points.begin(), s.points.end(), [&](const Point& p) { return p[k] == 0; });
    if (!met) {
      failed.push_back(std::string("Newton polyhedron does not intersect the coordinate plane ") +
                       axis_name(k) + " = 0");
    }
  }
  return failed;
}

Support augmented_support(const Support& s, long r) {
  std::vector<Point> pts = s.points;
  for (int i : axis_gaps(s)) {
    Point p(s.n, 0);
    p[i] = r;
    pts.push_back(p);
  }
  return Support::make(s.n, std::move(pts));
}

std::vector<BcfEntry> bcf_enumerate(const NewtonPolyhedron& base, const NewtonPolyhedron& augmented, long r) {
  std::set<Point> old_vertices(base.vertices().begin(), base.vertices().end());
  std::vector<BcfEntry> out;
  for (const Face& f : augmented.faces()) {
    if (!f.compact || !f.interior || (f.dim != 1 && f.dim != 2)) continue;
    std::set<Point> old;
    std::vector<Point> fresh;
    for (const auto& p : augmented.vertex_points(f)) {
      if (old_vertices.count(p)) {
        old.insert(p);
      } else {
        fresh.push_back(p);
      }
    }
    if (fresh.empty()) continue;
    if (fresh.size() > 1) {
      throw InvariantError("interior compact face of the augmented polyhedron contains several new vertices");
    }
    int axis = axial_index(fresh.front());
    if (axis < 0 || fresh.front()[axis] != r) {
      throw InvariantError("augmented vertex " + point_string(fresh.front()) + " is not a support point of f");
    }
    auto tau = base.find_face(old);
    if (!tau || base.face(*tau).dim != f.dim - 1) {
      throw InvariantError("augmented face through r e_i does not meet Gamma_+(f) in a face of dimension " +
                           std::to_string(f.dim - 1));
    }
    out.push_back({*tau, axis});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BcfEntry> bcf_direct(const NewtonPolyhedron& base) {
  std::vector<BcfEntry> out;
  for (const Face& F : base.faces()) {
    if (F.compact || !F.interior || F.recession.size() != 1) continue;
    int k = F.dim - 1;
    if (k != 0 && k != 1) continue;
    for (const Face* tau : base.faces_of_dim(k, FaceFilter::compact)) {
      if (base.contains(F, *tau)) out.push_back({tau->id, F.recession.front()});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AugmentedData augment_at(const Support& s, const NewtonPolyhedron& base, long r) {
  Support aug = augmented_support(s, r);
  AugmentedData A{r, aug, NewtonPolyhedron(aug), {}, {}, {}, {}};
  for (int i : axis_gaps(s)) {
    Point p(s.n, 0);
    p[i] = r;
    auto id = A.polyhedron.vertex_id(p);
    if (!id) throw InvariantError("r e_i is not a vertex of the augmented polyhedron");
    A.new_vertices.push_back(p);
    A.gamma_tilde_new[i] = A.polyhedron.vertex_gamma(A.polyhedron.face(*id));
  }
  for (const Face* v : base.faces_of_dim(0, FaceFilter::compact)) {
    const Point& p = base.vertices()[v->vertices.front()];
    auto id = A.polyhedron.vertex_id(p);
    if (!id) throw InvariantError("vertex " + point_string(p) + " of f is not a vertex of the augmented polyhedron");
    A.gamma_tilde[p] = A.polyhedron.vertex_gamma(A.polyhedron.face(*id));
  }
  A.bcf = bcf_enumerate(base, A.polyhedron, r);
  return A;
}

AugmentedData augment(const Support& s) {
  require_hypotheses(s);
  NewtonPolyhedron base(s);
  // An r that is too small may hide vertices of f or break the face
  // correspondence; such an r simply counts as not yet stable.
  auto attempt = [&](long r) -> std::optional<AugmentedData> {
    try {
      return augment_at(s, base, r);
    } catch (const InvariantError&) {
      return std::nullopt;
    }
  };
  long r = initial_r(s);
  auto cur = attempt(r);
  for (int step = 0; step < kMaxDoublings; ++step) {
    auto next = attempt(2 * r);
    if (cur && next && next->gamma_tilde == cur->gamma_tilde && next->gamma_tilde_new == cur->gamma_tilde_new &&
        next->bcf == cur->bcf) {
      if (!cur->polyhedron.is_simplicial()) {
        throw HypothesisError("augmented Newton polyhedron is not simplicial");
      }
      return std::move(*cur);
    }
    r *= 2;
    cur = std::move(next);
  }
  throw InvariantError("augmented polyhedron did not stabilize by r = " + std::to_string(r));
}

HodgeResult hodge_spectrum_theorem2(const Support& s) {
  require_hypotheses(s);
  NewtonPolyhedron P(s);
  FaceTable T(P);
  AugmentedData A = augment(s);

  HodgeResult res;
  if (bcf_direct(P) != A.bcf) {
    res.warnings.push_back("BCF multiset from the augmented polyhedron differs from the one read off the "
                           "non-compact faces of Gamma_+(f); the augmented one is used");
  }

  res.r = A.r;
  FracPoly sp = gamma_spectrum_unchecked(T);
  for (const Face* v : P.faces_of_dim(0, FaceFilter::compact)) {
    int gt = A.gamma_tilde.at(P.vertices()[v->vertices.front()]);
    sp += T[*v].q.shifted(Rational(1)) * Integer(gt - 3);
  }

  auto bcf_term = [&](const std::vector<int>& faces) {
    FracPoly out;
    for (int id : faces) {
      const Face& tau = P.face(id);
      long c = 3 - tau.dim;
      out += FracPoly::geometric(0, c - 2) * T[id].q;
      if (tau.dim == 0) out += FracPoly::monomial(Rational(1));
    }
    return out;
  };
  std::vector<int> multiset, as_set;
  for (const auto& e : A.bcf) multiset.push_back(e.face);
  std::set<int> uniq(multiset.begin(), multiset.end());
  as_set.assign(uniq.begin(), uniq.end());
  FracPoly with_multiset = bcf_term(multiset);
  if (with_multiset != bcf_term(as_set)) {
    res.warnings.push_back("BCF read as a set gives a different result than the multiset over axes; "
                           "the multiset reading is used");
  }
  res.sp_prime = sp - with_multiset;
  return res;
}

Support slice_support(const Support& s, int axis) {
  std::set<Point> pts;
  for (const auto& p : s.points) {
    Point q;
    for (int k = 0; k < s.n; ++k) {
      if (k != axis) q.push_back(p[k]);
    }
    pts.insert(q);
  }
  return Support::make(s.n - 1, {pts.begin(), pts.end()});
}

std::vector<SliceData> slice_spectra(const Support& s) {
  if (s.n != 2 && s.n != 3) throw HypothesisError("slice spectra need n = 2 or 3");
  std::vector<SliceData> out;
  for (int i : axis_gaps(s)) {
    SliceData d;
    d.axis = i;
    d.slice = slice_support(s, i);
    NewtonPolyhedron Q(d.slice);
    if (!Q.is_convenient()) {
      throw HypothesisError(std::string("slice transversal to the ") + axis_name(i) + "-axis is not convenient");
    }
    FaceTable T(Q);
    FracPoly sp = isolated_spectrum(T).sp;
    for (const auto& [alpha, mult] : sp.terms()) {
      if (mult < 0) throw InvariantError("negative multiplicity in a slice spectrum");
      for (Integer k = 0; k < mult; ++k) d.alphas.push_back(alpha);
    }
    d.mu = mass(sp);
    out.push_back(std::move(d));
  }
  return out;
}

SliceData slice_beta(const Support& s, SliceData d) {
  const int m = s.n - 1;
  const int axis = d.axis;
  NewtonPolyhedron base(s);
  NewtonPolyhedron Q(d.slice);

  // Witness lattice points for spectral numbers <= 1.
  std::vector<std::pair<Point, Rational>> witnesses;
  for (const Face* f : Q.compact_faces(false)) {
    if (!f->interior) continue;
    scan_parallelepiped(Q.vertex_points(*f), [&](const Point& p, const Rational& g, bool open) {
      if (open && g <= 1) witnesses.emplace_back(p, g);
    });
    if (m == 2 && f->dim == 0) witnesses.emplace_back(Q.vertices()[f->vertices.front()], Rational(1));
  }

  auto project = [&](const Point& p) {
    Point q;
    for (int k = 0; k < s.n; ++k) {
      if (k != axis) q.push_back(p[k]);
    }
    return q;
  };

  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& [p, alpha] : witnesses) {
    std::set<Rational> betas;
    for (const Face* sigma : base.faces_of_dim(m - 1, FaceFilter::compact)) {
      auto verts = base.vertex_points(*sigma);
      std::vector<Point> proj;
      for (const auto& v : verts) proj.push_back(project(v));
      bool on_facet = false;
      for (const Facet& tau : Q.facets()) {
        if (tau.offset <= 0) continue;
        bool all = true;
        for (const auto& q : proj) {
          std::int64_t val = 0;
          for (int k = 0; k < m; ++k) val += tau.normal[k] * q[k];
          if (val != tau.offset) all = false;
        }
        if (all) on_facet = true;
      }
      if (!on_facet) continue;
      // Solve p = sum c_k proj_k by Cramer's rule.
      lattice::Matrix M(m, lattice::Vector(m));
      for (int a = 0; a < m; ++a) {
        for (int k = 0; k < m; ++k) M[a][k] = static_cast<long>(proj[k][a]);
      }
      Integer det = lattice::determinant(M);
      if (det == 0) continue;
      std::vector<Rational> c(m);
      bool nonneg = true;
      Rational total = 0;
      for (int k = 0; k < m; ++k) {
        lattice::Matrix Mk = M;
        for (int a = 0; a < m; ++a) Mk[a][k] = static_cast<long>(p[a]);
        c[k] = make_rational(lattice::determinant(Mk), det);
        if (c[k] < 0) nonneg = false;
        total += c[k];
      }
      if (!nonneg || total != alpha) continue;
      Rational nu = 0;
      for (int k = 0; k < m; ++k) nu += c[k] * Rational(verts[k][axis]);
      betas.insert(frac_of(-nu));
    }
    if (betas.empty()) {
      throw HypothesisError("witness " + point_string(p) + " of the slice transversal to the " + axis_name(axis) +
                            "-axis lifts through no compact face of the Newton polyhedron (a projected face "
                            "lies in the slice boundary without matching a slice face)");
    }
    if (betas.size() > 1) {
      throw HypothesisError("witness " + point_string(p) + " of the slice transversal to the " + axis_name(axis) +
                            "-axis lifts ambiguously (a projected face lies in the slice boundary without "
                            "matching a slice face)");
    }
    Rational beta = *betas.begin();
    pairs.emplace_back(alpha, beta);
    if (m == 2 && alpha < 1) pairs.emplace_back(Rational(2) - alpha, frac_of(-beta));
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<Rational> alphas;
  d.betas.clear();
  for (const auto& [a, b] : pairs) {
    alphas.push_back(a);
    d.betas.push_back(b);
  }
  if (alphas != d.alphas) {
    throw InvariantError(std::string("witness exponents do not reproduce the spectrum of the slice transversal to the ") +
                         axis_name(axis) + "-axis");
  }
  return d;
}

FracPoly yomdin_series(const std::vector<SliceData>& slices, long r) {
  FracPoly out;
  for (const auto& d : slices) {
    if (d.betas.size() != d.alphas.size()) throw InvariantError("slice betas are not filled");
    for (std::size_t j = 0; j < d.alphas.size(); ++j) {
      for (long k = 0; k < r; ++k) {
        out.add_term(d.alphas[j] + (d.betas[j] + Rational(k)) / Rational(r), 1);
      }
    }
  }
  return out;
}

FracPoly augmented_spectrum(const Support& s, long r) {
  Support aug = augmented_support(s, r);
  NewtonPolyhedron P(aug);
  FaceTable T(P);
  if (s.n == 3) return spectrum_eq4(T).sp;
  if (s.n == 2) return spectrum_plane(T);
  throw HypothesisError("augmented spectrum needs n = 2 or 3");
}

FracPoly hodge_spectrum(const Support& s) {
  if (s.n == 3) return hodge_spectrum_theorem2(s).sp_prime;
  if (s.n == 2) {
    NewtonPolyhedron P(s);
    FaceTable T(P);
    return hodge_spectrum_plane(T);
  }
  throw HypothesisError("Hodge spectrum formulas need n = 2 or 3");
}

YomdinCheck crosscheck_yomdin(const Support& s) {
  YomdinCheck c;
  if (s.n == 3) {
    HodgeResult h = hodge_spectrum_theorem2(s);
    c.expected = h.sp_prime;
    c.r1 = h.r;
  } else if (s.n == 2) {
    if (axis_gaps(s).empty()) throw HypothesisError("support meets every coordinate axis (isolated case)");
    c.expected = hodge_spectrum(s);
    c.r1 = initial_r(s);
  } else {
    throw HypothesisError("Yomdin cross-check needs n = 2 or 3");
  }
  c.r2 = 2 * c.r1;
  std::vector<SliceData> slices;
  for (auto& d : slice_spectra(s)) slices.push_back(slice_beta(s, std::move(d)));
  c.diff1 = augmented_spectrum(s, c.r1) - yomdin_series(slices, c.r1);
  c.diff2 = augmented_spectrum(s, c.r2) - yomdin_series(slices, c.r2);
  c.ok = c.diff1 == c.diff2 && c.diff1 == c.expected;
  return c;
}

}  // namespace nspec
