#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nspec/fracpoly.hpp"
#include "nspec/newton.hpp"

namespace nspec {

/// Lattice points of the fundamental parallelepiped {sum c_k xi_k} of
/// linearly independent generators xi_k, graded by sum c_k.
struct Parallelepiped {
  FracPoly open;       // all c_k in (0, 1)
  FracPoly half_open;  // all c_k in [0, 1)
};

/// Calls fn(point, grading, open) for each lattice point of the half-open
/// parallelepiped; `open` tells whether every c_k is positive.
void scan_parallelepiped(const std::vector<Point>& generators,
                         const std::function<void(const Point&, const Rational&, bool)>& fn);

/// Scans the integer box [0, sum xi_k]. Throws InvariantError when the
/// generators are dependent.
Parallelepiped parallelepiped_points(const std::vector<Point>& generators);

/// Lattice distance of the cone over the vertices: ell(Z^n cap span) = (1/delta) Z.
Integer lattice_delta(const std::vector<Point>& vertices);

struct FaceInvariants {
  Integer delta = 1;
  Integer det = 0;  // |det| of the vertex matrix, set for (n-1)-faces
  Integer mu = 0;   // det / delta, set for (n-1)-faces
  FracPoly q;
  FracPoly qhat;
  FracPoly s;       // set for (n-1)-faces
  long l = 0;       // lattice length, set for edges
  int beta = 0;     // interior compact edges through a vertex
};

/// q_sigma (open) and qhat_sigma (half-open); the empty face gives 1.
/// Throws HypothesisError "non-simplicial face" when the face is not a simplex.
FracPoly face_q(const NewtonPolyhedron& P, const Face& f);
FracPoly face_qhat(const NewtonPolyhedron& P, const Face& f);

/// mu(sigma) * sum_{k<delta} t^{k/delta} for a compact (n-1)-face.
FracPoly face_s(const NewtonPolyhedron& P, const Face& f);

FaceInvariants face_lattice_invariants(const NewtonPolyhedron& P, const Face& f);

/// Invariants of every compact face (including the empty one), indexed by face id.
class FaceTable {
 public:
  /// Throws HypothesisError when P is not simplicial.
  explicit FaceTable(const NewtonPolyhedron& P);
  FaceTable(NewtonPolyhedron&&) = delete;  // the table keeps a reference

  const NewtonPolyhedron& polyhedron() const { return *P_; }
  const FaceInvariants& operator[](int id) const;
  const FaceInvariants& operator[](const Face& f) const { return (*this)[f.id]; }

 private:
  const NewtonPolyhedron* P_;
  std::vector<std::optional<FaceInvariants>> table_;
};

}  // namespace nspec
