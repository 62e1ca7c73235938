#include "nspec/spectrum.hpp"

#include "nspec/errors.hpp"

namespace nspec {

namespace {

void require_convenient(const NewtonPolyhedron& P) {
  if (!P.is_convenient()) throw HypothesisError("Newton polyhedron is not convenient");
}

void require_dimension(const NewtonPolyhedron& P, int n, const char* what) {
  if (P.n() != n) {
    throw HypothesisError(std::string(what) + " needs n = " + std::to_string(n) + ", got n = " +
                          std::to_string(P.n()));
  }
}

}  // namespace

FracPoly one_minus_t_pow(long m) {
  if (m < 0) throw InvariantError("negative power of (1 - t)");
  FracPoly p;
  Integer binom = 1;
  for (long j = 0; j <= m; ++j) {
    p.add_term(Rational(j), j % 2 ? Integer(-binom) : binom);
    binom = binom * (m - j) / (j + 1);
  }
  return p;
}

FracPoly gamma_spectrum_unchecked(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  const int n = P.n();
  FracPoly sp;
  long icf0 = 0;
  for (const Face* f : P.compact_faces(false)) {
    if (!f->interior) continue;
    if (f->dim == 0) ++icf0;
    long c = n - f->dim;
    sp += FracPoly::geometric(0, c - 1) * T[*f].q;
  }
  sp += (FracPoly::geometric(0, n - 2) * FracPoly::monomial(Rational(1))) * Integer(icf0);
  return sp;
}

FracPoly gamma_spectrum(const FaceTable& T) {
  require_convenient(T.polyhedron());
  return gamma_spectrum_unchecked(T);
}

FracPoly defect_theorem1(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_dimension(P, 3, "the defect formula");
  require_convenient(P);
  FracPoly def;
  for (const Face* v : P.faces_of_dim(0, FaceFilter::compact)) {
    int gamma = P.vertex_gamma(*v);
    def += T[*v].q.shifted(Rational(1)) * Integer(gamma - 3);
  }
  return def;
}

std::map<int, FracPoly> combinatorial_polynomials(const NewtonPolyhedron& P) {
  const int n = P.n();
  auto compact = P.compact_faces(true);
  std::map<int, FracPoly> r;
  for (const Face* tau : compact) {
    FracPoly sum;
    for (const Face* sigma : compact) {
      if (!P.contains(*sigma, *tau)) continue;
      int d = sigma->cone_dim();
      if (sigma->k < d) throw InvariantError("k(sigma) < d(sigma) on face " + std::to_string(sigma->id));
      FracPoly term = one_minus_t_pow(sigma->k - d);
      if ((n - d) % 2) term = -term;
      sum += term;
    }
    r.emplace(tau->id, std::move(sum));
  }
  return r;
}

FracPoly spectrum_steenbrink(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_convenient(P);
  const int n = P.n();
  FracPoly by_qhat;
  for (const Face* sigma : P.compact_faces(true)) {
    int d = sigma->cone_dim();
    FracPoly term = one_minus_t_pow(sigma->k - d) * T[*sigma].qhat;
    if ((n - d) % 2) term = -term;
    by_qhat += term;
  }
  FracPoly by_r;
  for (const auto& [id, r] : combinatorial_polynomials(P)) by_r += r * T[id].q;
  if (by_qhat != by_r) {
    throw InvariantError("Steenbrink sum over qhat (" + by_qhat.to_string() +
                         ") differs from the sum over r_tau q_tau (" + by_r.to_string() + ")");
  }
  return by_qhat;
}

FracPoly spectrum_plane(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_dimension(P, 2, "the plane spectrum formula");
  if (!P.is_convenient()) {
    throw HypothesisError("Newton polyhedron is not convenient (use the Hodge spectrum formula)");
  }
  return gamma_spectrum_unchecked(T);
}

FracPoly hodge_spectrum_plane(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_dimension(P, 2, "the plane Hodge spectrum formula");
  if (P.is_convenient()) {
    throw HypothesisError("Newton polyhedron is convenient (use the plane spectrum formula)");
  }
  Support s = Support::make(2, P.support_points());
  FracPoly sp = gamma_spectrum_unchecked(T);
  for (int i : axis_gaps(s)) {
    const Face* ray_face = nullptr;
    for (const Face* f : P.faces_of_dim(1)) {
      if (f->recession == std::vector<int>{i}) ray_face = f;
    }
    if (ray_face == nullptr || ray_face->vertices.size() != 1) {
      throw InvariantError("no non-compact edge parallel to axis " + std::to_string(i));
    }
    auto v = P.vertex_id(P.vertices()[ray_face->vertices.front()]);
    sp -= T[*v].q;
  }
  return sp;
}

SpectrumReport spectrum_eq4(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_dimension(P, 3, "the spectrum formula");
  require_convenient(P);
  SpectrumReport rep;
  rep.gamma_sp = gamma_spectrum(T);
  rep.defect = defect_theorem1(T);
  rep.sp = rep.gamma_sp + rep.defect;
  rep.sp_steenbrink = spectrum_steenbrink(T);
  rep.mu = mass(rep.sp);
  rep.route_notes = {"gamma_sp: interior compact faces", "defect: vertex 2-face counts",
                     "sp_steenbrink: alternating sum over compact faces"};
  if (rep.sp != rep.sp_steenbrink) {
    throw InvariantError("spectrum routes disagree: Gamma-spectrum + defect = " + rep.sp.to_string() +
                         ", Steenbrink = " + rep.sp_steenbrink.to_string());
  }
  return rep;
}

SpectrumReport isolated_spectrum(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  if (P.n() == 3) return spectrum_eq4(T);
  if (P.n() > 3) throw HypothesisError("spectrum formulas need n <= 3");
  require_convenient(P);
  SpectrumReport rep;
  rep.gamma_sp = gamma_spectrum(T);
  rep.sp = rep.gamma_sp;
  rep.sp_steenbrink = spectrum_steenbrink(T);
  rep.mu = mass(rep.sp);
  rep.route_notes = {"gamma_sp: interior compact faces (no defect for n <= 2)",
                     "sp_steenbrink: alternating sum over compact faces"};
  if (rep.sp != rep.sp_steenbrink) {
    throw InvariantError("spectrum routes disagree: Gamma-spectrum = " + rep.sp.to_string() +
                         ", Steenbrink = " + rep.sp_steenbrink.to_string());
  }
  return rep;
}

}  // namespace nspec
