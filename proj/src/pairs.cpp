#include "nspec/pairs.hpp"

#include <set>

#include "nspec/errors.hpp"
#include "nspec/spectrum.hpp"

namespace nspec {

namespace {

void require_surface(const NewtonPolyhedron& P) {
  if (P.n() != 3) throw HypothesisError("spectral pairs need n = 3, got n = " + std::to_string(P.n()));
  if (!P.is_convenient()) throw HypothesisError("Newton polyhedron is not convenient");
}

}  // namespace

BivarPoly pairs_conjectural(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_surface(P);
  const int n = P.n();
  BivarPoly out;
  long icf0 = 0;
  for (const Face* f : P.compact_faces(false)) {
    if (!f->interior) continue;
    if (f->dim == 0) ++icf0;
    long c = n - f->dim;
    BivarPoly ladder;
    for (long j = 0; j < c; ++j) ladder.add_term(Rational(j), c + 1 - 2 * j, 1);
    out += ladder * BivarPoly::from_t(T[*f].q);
  }
  out.add_term(Rational(1), 3, icf0);
  out.add_term(Rational(2), 1, icf0);
  for (const Face* v : P.faces_of_dim(0, FaceFilter::compact)) {
    int gamma = P.vertex_gamma(*v);
    BivarPoly term = BivarPoly::from_t(T[*v].q.shifted(Rational(1)), 2);
    out += term * BivarPoly::monomial(Rational(0), 0, gamma - 3);
  }
  return out;
}

BivarPoly pairs_steenbrink(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_surface(P);
  BivarPoly out;
  for (const auto& [id, r] : combinatorial_polynomials(P)) {
    const Face& tau = P.face(id);
    out += inflate(r, 5 - tau.cone_dim()) * BivarPoly::from_t(T[id].q);
  }
  if (!out.is_zero() && out.min_u_exponent() < 0) {
    throw InvariantError("negative weight in spectral pairs: " + out.to_string());
  }
  return out;
}

bool in_class(const EigenClass& c, const Integer& delta) {
  Rational x = c.l * Rational(delta);
  x.canonicalize();
  return x.get_den() == 1;
}

std::vector<EigenClass> eigen_classes(const FaceTable& T) {
  std::set<EigenClass> classes;
  for (const Face* f : T.polyhedron().compact_faces(false)) {
    long d = T[*f].delta.get_si();
    for (long k = 1; k < d; ++k) classes.insert(EigenClass{make_rational(k, d)});
  }
  return {classes.begin(), classes.end()};
}

JordanCounts jordan_counts(const FaceTable& T) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_surface(P);
  JordanCounts jc;
  for (const auto& c : eigen_classes(T)) {
    Integer n3 = 0, n2 = 0;
    for (const Face* v : P.faces_of_dim(0, FaceFilter::compact)) {
      if (!in_class(c, T[*v].delta)) continue;
      if (v->interior) ++n3;
      n2 -= T[*v].beta;
    }
    for (const Face* e : P.faces_of_dim(1, FaceFilter::interior_compact)) {
      if (in_class(c, T[*e].delta)) n2 += T[*e].l;
    }
    if (n2 < 0) {
      throw InvariantError("conjecture finding: negative size-2 Jordan count " + n2.get_str() +
                           " for l = " + rational_string(c.l));
    }
    jc.n3[c] = n3;
    jc.n2[c] = n2;
  }
  std::set<Point> positive;
  for (const Face* e : P.faces_of_dim(1, FaceFilter::interior_compact)) {
    auto verts = P.vertex_points(*e);
    long g = T[*e].l;
    for (long k = 0; k <= g; ++k) {
      Point p(3);
      bool pos = true;
      for (int i = 0; i < 3; ++i) {
        p[i] = verts[0][i] + (verts[1][i] - verts[0][i]) / g * k;
        if (p[i] <= 0) pos = false;
      }
      if (pos) positive.insert(p);
    }
  }
  jc.n2_unipotent = static_cast<long>(positive.size());
  return jc;
}

Integer jordan_counts_via_q(const FaceTable& T, const EigenClass& c) {
  const NewtonPolyhedron& P = T.polyhedron();
  require_surface(P);
  Integer sum = 0;
  for (const Face* e : P.faces_of_dim(1, FaceFilter::interior_compact)) {
    if (!in_class(c, T[*e].delta)) continue;
    sum += T[*e].q.coeff(Rational(1) - c.l) + T[*e].q.coeff(Rational(2) - c.l);
  }
  return sum;
}

std::vector<JordanFinding> jordan_consistency(const FaceTable& T) {
  std::vector<JordanFinding> out;
  JordanCounts jc = jordan_counts(T);
  for (const auto& [c, n2] : jc.n2) {
    Integer via_q = jordan_counts_via_q(T, c);
    if (via_q != n2) out.push_back({c, n2, via_q});
  }
  return out;
}

}  // namespace nspec
