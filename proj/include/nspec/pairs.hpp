#pragma once

#include <map>
#include <string>
#include <vector>

#include "nspec/facepoly.hpp"
#include "nspec/fracpoly.hpp"

namespace nspec {

/// Spectral pairs sum t^alpha u^w from interior faces, the interior-vertex
/// term (tu^3 + t^2u) and the vertex defect at weight 2. Requires n = 3,
/// simplicial, convenient. Conjectural.
BivarPoly pairs_conjectural(const FaceTable& T);

/// sum over compact tau (empty included) of r_tau(t/u^2) u^{5-d(tau)} q_tau(t).
/// Throws InvariantError on a negative weight. Conjectural.
BivarPoly pairs_steenbrink(const FaceTable& T);

/// Eigenvalue class lambda = exp(2 pi i l), l in [0, 1).
struct EigenClass {
  Rational l;
  friend auto operator<=>(const EigenClass& a, const EigenClass& b) { return cmp(a.l, b.l) <=> 0; }
  friend bool operator==(const EigenClass& a, const EigenClass& b) { return a.l == b.l; }
};

/// Whether lambda^delta = 1.
bool in_class(const EigenClass& c, const Integer& delta);

/// The classes l = k/delta_sigma mod 1 over all compact faces, l != 0.
std::vector<EigenClass> eigen_classes(const FaceTable& T);

struct JordanCounts {
  std::map<EigenClass, Integer> n3;  // blocks of size 3, lambda != 1
  std::map<EigenClass, Integer> n2;  // blocks of size 2, lambda != 1
  Integer n2_unipotent = 0;          // blocks of size 2, lambda = 1
};

/// n3 = |ICF^0_lambda|, n2 = sum_{ICF^1_lambda} l(sigma) - sum_{CF^0_lambda} beta_sigma,
/// n2_unipotent = lattice points with positive coordinates on interior compact
/// edges. Requires n = 3, simplicial, convenient. Throws InvariantError
/// ("conjecture finding") on a negative count.
JordanCounts jordan_counts(const FaceTable& T);

/// sum over sigma in ICF^1_lambda of the coefficients of t^{1-l} and t^{2-l} in q_sigma.
Integer jordan_counts_via_q(const FaceTable& T, const EigenClass& c);

struct JordanFinding {
  EigenClass lambda;
  Integer from_faces;
  Integer from_q;
};

/// Classes where the two size-2 counts disagree (empty when consistent).
std::vector<JordanFinding> jordan_consistency(const FaceTable& T);

}  // namespace nspec
