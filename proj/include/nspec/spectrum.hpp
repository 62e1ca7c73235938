#pragma once

#include <map>
#include <string>
#include <vector>

#include "nspec/facepoly.hpp"
#include "nspec/fracpoly.hpp"
#include "nspec/newton.hpp"

namespace nspec {

struct SpectrumReport {
  FracPoly gamma_sp;
  FracPoly defect;
  FracPoly sp;             // gamma_sp + defect
  FracPoly sp_steenbrink;  // independent route, equal to sp
  Integer mu = 0;
  std::vector<std::string> route_notes;
};

/// (sum_{j<c} t^j) * q summed over interior compact faces, c = n - dim,
/// plus |ICF^0| * (1 + ... + t^{n-2}) * t. Requires simplicial and convenient.
FracPoly gamma_spectrum(const FaceTable& T);
/// Same sum without the convenience check (the Hodge-spectrum formulas use it
/// on non-convenient polyhedra).
FracPoly gamma_spectrum_unchecked(const FaceTable& T);

/// sum over compact vertices of (gamma - 3) * q * t. Requires n = 3,
/// simplicial, convenient.
FracPoly defect_theorem1(const FaceTable& T);

/// Gamma-spectrum plus defect, checked against the Steenbrink route.
/// Throws InvariantError when the two routes disagree.
SpectrumReport spectrum_eq4(const FaceTable& T);

/// r_tau(t) = sum over compact sigma >= tau of (-1)^{n-d(sigma)} (1-t)^{k(sigma)-d(sigma)},
/// indexed by face id (the empty face included).
std::map<int, FracPoly> combinatorial_polynomials(const NewtonPolyhedron& P);

/// sum over compact sigma (empty included) of (-1)^{n-d} (1-t)^{k-d} qhat_sigma,
/// checked against sum_tau r_tau q_tau. Requires simplicial and convenient.
FracPoly spectrum_steenbrink(const FaceTable& T);

/// The two-variable spectrum of a convenient polyhedron.
FracPoly spectrum_plane(const FaceTable& T);

/// Hodge spectrum of a non-convenient two-variable polyhedron: the
/// Gamma-spectrum minus q of the vertex on each non-compact face parallel to
/// an axis not met by the support.
FracPoly hodge_spectrum_plane(const FaceTable& T);

/// Spectrum of an isolated (convenient, simplicial) germ for n = 1, 2, 3,
/// computed by both routes.
SpectrumReport isolated_spectrum(const FaceTable& T);

/// (1 - t)^m for m >= 0.
FracPoly one_minus_t_pow(long m);

}  // namespace nspec
