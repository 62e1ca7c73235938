#include "nspec/zeta.hpp"

#include <algorithm>

#include "nspec/errors.hpp"
#include "nspec/facepoly.hpp"
#include "nspec/newton.hpp"
#include "nspec/spectrum.hpp"

namespace nspec {

std::vector<Point> restrict_support(const Support& s, const std::vector<int>& axes) {
  std::vector<Point> out;
  for (const auto& p : s.points) {
    bool inside = true;
    for (int i = 0; i < s.n && inside; ++i) {
      if (p[i] != 0 && std::find(axes.begin(), axes.end(), i) == axes.end()) inside = false;
    }
    if (!inside) continue;
    Point q;
    for (int i : axes) q.push_back(p[i]);
    out.push_back(std::move(q));
  }
  return out;
}

FracPoly mstar(const Support& s, const std::vector<int>& axes) {
  if (axes.empty()) return FracPoly::constant(1);
  auto pts = restrict_support(s, axes);
  if (pts.empty()) {
    throw HypothesisError("support misses the coordinate subspace; the support is not convenient");
  }
  const int k = static_cast<int>(axes.size());
  Support r = Support::make(k, std::move(pts));
  NewtonPolyhedron P(r);
  if (!P.is_simplicial()) throw HypothesisError("restricted Newton polyhedron is not simplicial");
  FracPoly sum;
  for (const Face* f : P.faces_of_dim(k - 1, FaceFilter::compact)) sum += face_s(P, *f);
  return sum;
}

ZetaReport mzeta(const Support& s) {
  if (!axis_gaps(s).empty()) throw HypothesisError("Newton polyhedron is not convenient");
  ZetaReport rep;
  const int n = s.n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> axes;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) axes.push_back(i);
    }
    FracPoly m = mstar(s, axes);
    if ((n - axes.size()) % 2) {
      rep.m -= m;
    } else {
      rep.m += m;
    }
    rep.mstar_by_subset.emplace(std::move(axes), std::move(m));
  }
  return rep;
}

ZetaCheck compare_zeta(const FracPoly& spectrum, const Support& s) {
  ZetaCheck c;
  c.spectrum = spectrum;
  c.m = mzeta(s).m;
  c.discrepancy = phi(spectrum) - c.m;
  c.ok = c.discrepancy.is_zero();
  return c;
}

ZetaCheck verify_zeta_identity(const Support& s) {
  NewtonPolyhedron P(s);
  FaceTable T(P);
  return compare_zeta(isolated_spectrum(T).sp, s);
}

}  // namespace nspec
