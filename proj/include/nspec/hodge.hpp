#pragma once

#include <map>
#include <string>
#include <vector>

#include "nspec/fracpoly.hpp"
#include "nspec/newton.hpp"
#include "nspec/polyparse.hpp"

namespace nspec {

/// Names of the failed hypotheses of the surface Hodge-spectrum formula
/// (n = 3, simplicial, some axis missed, every coordinate plane met); empty
/// when all hold.
std::vector<std::string> surface_hodge_hypotheses(const Support& s);

/// Support of f + l^r: the support plus r e_i for every axis i missed by f.
Support augmented_support(const Support& s, long r);

/// A compact face of Gamma_+(f) (by face id) lying in a non-compact face
/// with recession direction `axis`.
struct BcfEntry {
  int face = 0;
  int axis = 0;
  friend auto operator<=>(const BcfEntry&, const BcfEntry&) = default;
};

struct AugmentedData {
  long r = 0;
  Support support;
  NewtonPolyhedron polyhedron;
  std::vector<Point> new_vertices;           // r e_i
  std::map<Point, int> gamma_tilde;          // 2-faces through each vertex of f
  std::map<int, int> gamma_tilde_new;        // 2-faces through r e_i, by axis
  std::vector<BcfEntry> bcf;                 // sorted multiset, face ids of Gamma_+(f)
};

/// Interior compact (j+1)-faces of Gamma_+(f + l^r) through a single new
/// vertex r e_i, mapped back to their faces of Gamma_+(f) (j = 0, 1).
std::vector<BcfEntry> bcf_enumerate(const NewtonPolyhedron& base, const NewtonPolyhedron& augmented, long r);

/// The same multiset read off Gamma_+(f): compact j-faces lying in a
/// (j+1)-dimensional non-compact face with one recession ray that is not in
/// a coordinate plane.
std::vector<BcfEntry> bcf_direct(const NewtonPolyhedron& base);

AugmentedData augment_at(const Support& s, const NewtonPolyhedron& base, long r);

/// Doubles r from 1 + 3 * (largest coordinate sum) until gamma_tilde and the
/// BCF multiset agree at r and 2r. Requires the surface hypotheses.
AugmentedData augment(const Support& s);

struct HodgeResult {
  FracPoly sp_prime;
  long r = 0;  // stabilized r used for gamma_tilde
  std::vector<std::string> warnings;
};

/// Hodge spectrum of a non-isolated surface germ from Gamma_+(f), the
/// augmented vertex counts gamma_tilde and the BCF multiset.
HodgeResult hodge_spectrum_theorem2(const Support& s);

/// Transversal slice data for one axis i missed by f.
struct SliceData {
  int axis = 0;
  Support slice;
  Integer mu = 0;
  std::vector<Rational> alphas;  // ascending, paired with betas
  std::vector<Rational> betas;   // in [0, 1), empty until slice_beta
};

/// Forgets coordinate i of every support point.
Support slice_support(const Support& s, int axis);

/// Slice spectra for every axis missed by f (n = 2 or 3). Each slice must be
/// convenient.
std::vector<SliceData> slice_spectra(const Support& s);

/// Fills alphas/betas from witness lattice points lifted through compact
/// faces of Gamma_+(f); alpha > 1 is paired with 2 - alpha. Throws
/// HypothesisError when a witness cannot be lifted unambiguously.
SliceData slice_beta(const Support& s, SliceData d);

/// sum over slices and j of sum_{k<r} t^{alpha + beta/r + k/r}.
FracPoly yomdin_series(const std::vector<SliceData>& slices, long r);

/// Spectrum of f + l^r (n = 2 or 3).
FracPoly augmented_spectrum(const Support& s, long r);

/// The Hodge spectrum: the plane formula for n = 2, the surface formula for n = 3.
FracPoly hodge_spectrum(const Support& s);

struct YomdinCheck {
  bool ok = false;
  long r1 = 0;
  long r2 = 0;
  FracPoly diff1;     // Sp(f + l^r1) - yomdin(r1)
  FracPoly diff2;     // Sp(f + l^r2) - yomdin(r2)
  FracPoly expected;  // hodge_spectrum(s)
};

/// Checks that Sp(f + l^r) - yomdin_series(r) is independent of r and equals
/// the Hodge spectrum.
YomdinCheck crosscheck_yomdin(const Support& s);

}  // namespace nspec
