#include "nspec/facepoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "nspec/errors.hpp"
#include "nspec/lattice.hpp"

namespace nspec {

namespace {

using i128 = __int128;

void require_simplex(const Face& f) {
  if (!f.empty() && static_cast<int>(f.vertices.size()) != f.dim + 1) {
    throw HypothesisError("non-simplicial face: compact face of dimension " + std::to_string(f.dim) +
                          " with " + std::to_string(f.vertices.size()) + " vertices");
  }
}

}  // namespace

void scan_parallelepiped(const std::vector<Point>& gens,
                         const std::function<void(const Point&, const Rational&, bool)>& fn) {
  if (gens.empty()) {
    fn(Point{}, Rational(0), true);
    return;
  }
  const int d = static_cast<int>(gens.size());
  const int n = static_cast<int>(gens[0].size());

  // Pick d coordinates with a nonsingular minor and the smallest box.
  std::vector<int> best_rows;
  Integer best_det = 0;
  i128 best_box = 0;
  std::vector<int> rows(d);
  std::function<void(int, int)> choose = [&](int pos, int start) {
    if (pos == d) {
      lattice::Matrix m(d, lattice::Vector(d));
      i128 box = 1;
      for (int a = 0; a < d; ++a) {
        std::int64_t sum = 0;
        for (int k = 0; k < d; ++k) {
          m[a][k] = static_cast<long>(gens[k][rows[a]]);
          sum += gens[k][rows[a]];
        }
        box *= sum;
      }
      Integer det = lattice::determinant(m);
      if (det != 0 && (best_rows.empty() || box < best_box)) {
        best_rows = rows;
        best_det = det;
        best_box = box;
      }
      return;
    }
    for (int r = start; r < n; ++r) {
      rows[pos] = r;
      choose(pos + 1, r + 1);
    }
  };
  choose(0, 0);
  if (best_rows.empty()) throw InvariantError("parallelepiped generators are linearly dependent");

  // Adjugate A with A * M = D * I, normalized to D > 0.
  const std::vector<int>& R = best_rows;
  std::vector<std::vector<std::int64_t>> adj(d, std::vector<std::int64_t>(d));
  for (int k = 0; k < d; ++k) {
    for (int a = 0; a < d; ++a) {
      lattice::Matrix minor;
      for (int aa = 0; aa < d; ++aa) {
        if (aa == a) continue;
        lattice::Vector row;
        for (int kk = 0; kk < d; ++kk) {
          if (kk != k) row.emplace_back(static_cast<long>(gens[kk][R[aa]]));
        }
        minor.push_back(std::move(row));
      }
      Integer c = lattice::determinant(std::move(minor));
      if ((k + a) % 2) c = -c;
      adj[k][a] = c.get_si();
    }
  }
  std::int64_t D = best_det.get_si();
  if (D < 0) {
    D = -D;
    for (auto& row : adj) {
      for (auto& x : row) x = -x;
    }
  }

  std::vector<int> others;
  for (int j = 0; j < n; ++j) {
    if (std::find(R.begin(), R.end(), j) == R.end()) others.push_back(j);
  }
  std::vector<std::int64_t> bound(d);
  for (int a = 0; a < d; ++a) {
    for (int k = 0; k < d; ++k) bound[a] += gens[k][R[a]];
  }

  std::vector<std::int64_t> y(d, 0);
  std::vector<i128> w(d);
  Point x(n);
  while (true) {
    bool inside = true, open = true;
    i128 total = 0;
    for (int k = 0; k < d && inside; ++k) {
      i128 s = 0;
      for (int a = 0; a < d; ++a) s += static_cast<i128>(adj[k][a]) * y[a];
      w[k] = s;
      if (s < 0 || s >= D) inside = false;
      if (s == 0) open = false;
      total += s;
    }
    if (inside) {
      for (int j : others) {
        i128 v = 0;
        for (int k = 0; k < d; ++k) v += w[k] * gens[k][j];
        if (v % D != 0) {
          inside = false;
          break;
        }
        x[j] = static_cast<std::int64_t>(v / D);
      }
    }
    if (inside) {
      for (int a = 0; a < d; ++a) x[R[a]] = y[a];
      fn(x, make_rational(static_cast<long>(total), D), open);
    }
    int a = 0;
    while (a < d && ++y[a] >= bound[a]) {
      y[a] = 0;
      ++a;
    }
    if (a == d) break;
  }
}

Parallelepiped parallelepiped_points(const std::vector<Point>& gens) {
  Parallelepiped out;
  scan_parallelepiped(gens, [&](const Point&, const Rational& e, bool open) {
    out.half_open.add_term(e, 1);
    if (open) out.open.add_term(e, 1);
  });
  return out;
}

Integer lattice_delta(const std::vector<Point>& vertices) {
  if (vertices.empty()) return 1;
  Integer full = lattice::determinantal_divisor(lattice::to_matrix(vertices));
  std::vector<Point> diffs;
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    Point v(vertices[k].size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = vertices[k][i] - vertices[0][i];
    diffs.push_back(std::move(v));
  }
  Integer sub = diffs.empty() ? Integer(1) : lattice::determinantal_divisor(lattice::to_matrix(diffs));
  return full / sub;
}

FracPoly face_q(const NewtonPolyhedron& P, const Face& f) {
  if (!f.compact) throw HypothesisError("q is defined for compact faces only");
  require_simplex(f);
  return parallelepiped_points(P.vertex_points(f)).open;
}

FracPoly face_qhat(const NewtonPolyhedron& P, const Face& f) {
  if (!f.compact) throw HypothesisError("qhat is defined for compact faces only");
  require_simplex(f);
  return parallelepiped_points(P.vertex_points(f)).half_open;
}

FracPoly face_s(const NewtonPolyhedron& P, const Face& f) {
  if (!f.compact || f.dim != P.n() - 1) {
    throw HypothesisError("s is defined for compact faces of dimension n-1");
  }
  return face_lattice_invariants(P, f).s;
}

FaceInvariants face_lattice_invariants(const NewtonPolyhedron& P, const Face& f) {
  if (!f.compact) throw HypothesisError("lattice invariants are defined for compact faces only");
  require_simplex(f);
  FaceInvariants inv;
  auto verts = P.vertex_points(f);
  auto box = parallelepiped_points(verts);
  inv.q = std::move(box.open);
  inv.qhat = std::move(box.half_open);
  inv.delta = lattice_delta(verts);
  const int n = P.n();

  if (f.dim == n - 1) {
    inv.det = abs(lattice::determinant(lattice::to_matrix(verts)));
    inv.mu = inv.det / inv.delta;
    if (inv.mu * inv.delta != inv.det) throw InvariantError("delta does not divide det");
    for (int id : f.facet_ids) {
      const Facet& facet = P.facets()[id];
      if (facet.offset > 0 && inv.delta != facet.offset) {
        throw InvariantError("lattice distance " + inv.delta.get_str() + " differs from facet offset " +
                             std::to_string(facet.offset));
      }
    }
    long dl = inv.delta.get_si();
    inv.s = FracPoly::fractional_run(0, dl - 1, dl) * inv.mu;
  }
  if (f.dim == 1) {
    Point dir(n);
    for (int i = 0; i < n; ++i) dir[i] = verts[1][i] - verts[0][i];
    inv.l = lattice::gcd_of(dir);
  }
  if (f.dim == 0) {
    for (const Face* e : P.faces_of_dim(1, FaceFilter::interior_compact)) {
      if (P.contains(*e, f)) ++inv.beta;
    }
  }
  return inv;
}

FaceTable::FaceTable(const NewtonPolyhedron& P) : P_(&P), table_(P.faces().size()) {
  if (!P.is_simplicial()) {
    for (const Face* f : P.compact_faces(false)) {
      if (static_cast<int>(f->vertices.size()) == f->dim + 1) continue;
      std::string pts;
      for (const Point& p : P.vertex_points(*f)) {
        pts += pts.empty() ? "(" : ", (";
        for (std::size_t i = 0; i < p.size(); ++i) pts += (i ? "," : "") + std::to_string(p[i]);
        pts += ")";
      }
      throw HypothesisError("Newton polyhedron is not simplicial: non-simplicial face with vertices " + pts);
    }
    throw HypothesisError("Newton polyhedron is not simplicial");
  }
  for (const Face* f : P.compact_faces(true)) {
    if (f->empty()) {
      FaceInvariants inv;
      inv.q = FracPoly::constant(1);
      inv.qhat = FracPoly::constant(1);
      table_[f->id] = std::move(inv);
    } else {
      table_[f->id] = face_lattice_invariants(P, *f);
    }
  }
}

const FaceInvariants& FaceTable::operator[](int id) const {
  const auto& entry = table_.at(id);
  if (!entry) throw InvariantError("face " + std::to_string(id) + " is not compact");
  return *entry;
}

}  // namespace nspec
