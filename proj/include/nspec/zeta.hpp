#pragma once

#include <map>
#include <vector>

#include "nspec/fracpoly.hpp"
#include "nspec/polyparse.hpp"

namespace nspec {

struct ZetaReport {
  std::map<std::vector<int>, FracPoly> mstar_by_subset;  // keyed by 0-based axes
  FracPoly m;
};

/// Support points with zero entries outside `axes`, re-embedded in |axes| variables.
/// Returns an empty point list when nothing survives.
std::vector<Point> restrict_support(const Support& s, const std::vector<int>& axes);

/// Sum of s_sigma over the compact (|I|-1)-faces of the restricted polyhedron;
/// the constant 1 for I empty.
FracPoly mstar(const Support& s, const std::vector<int>& axes);

/// Alternating sum of mstar over all coordinate subsets. Requires a convenient support.
ZetaReport mzeta(const Support& s);

struct ZetaCheck {
  bool ok = false;
  FracPoly spectrum;
  FracPoly m;
  FracPoly discrepancy;  // phi(spectrum) - m
};

/// Compares phi(spectrum) with M_f for a given spectrum.
ZetaCheck compare_zeta(const FracPoly& spectrum, const Support& s);
/// Computes the isolated spectrum and compares it with M_f.
ZetaCheck verify_zeta_identity(const Support& s);

}  // namespace nspec
