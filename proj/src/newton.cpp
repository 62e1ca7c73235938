#include "nspec/newton.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "nspec/errors.hpp"
#include "nspec/lattice.hpp"

namespace nspec {

namespace {

using lattice::Matrix;
using lattice::Vector;

// Calls fn(indices) for every k-subset of [0, m).
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const Support& support) : n_(support.n), points_(support.points) {
  const int n = n_;
  const int m = n + static_cast<int>(points_.size());
  if (m > kMaxGenerators) {
    throw HypothesisError("support too large: at most " + std::to_string(kMaxGenerators - n) +
                          " points in dimension " + std::to_string(n));
  }

  // Generators of the homogenized cone: axes first, then support points.
  Matrix gens;
  gens.reserve(m);
  for (int i = 0; i < n; ++i) {
    Vector g(n + 1, 0);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  for (const auto& p : points_) {
    Vector g;
    for (auto x : p) g.emplace_back(static_cast<long>(x));
    g.emplace_back(1);
    gens.push_back(std::move(g));
  }

  // Facets: normals through n independent generators with every generator
  // on the nonnegative side.
  std::map<Vector, std::uint64_t> found;
  for_each_subset(m, n, [&](const std::vector<int>& idx) {
    if (idx.back() < n) return;  // only axes: the hyperplane at infinity
    Matrix rows;
    for (int i : idx) rows.push_back(gens[i]);
    Vector normal = lattice::orthogonal_complement(rows);
    Integer g = lattice::content(normal);
    if (g == 0) return;
    for (auto& x : normal) x /= g;
    bool pos = false, neg = false;
    std::uint64_t incidence = 0;
    for (int j = 0; j < m; ++j) {
      int s = sgn(lattice::dot(normal, gens[j]));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) incidence |= std::uint64_t{1} << j;
    }
    if (pos && neg) return;
    if (neg) {
      for (auto& x : normal) x = -x;
    }
    bool at_infinity = true;
    for (int i = 0; i < n; ++i) {
      if (normal[i] != 0) at_infinity = false;
    }
    if (at_infinity) return;
    found.emplace(std::move(normal), incidence);
  });

  for (const auto& [normal, incidence] : found) {
    Facet f;
    for (int i = 0; i < n; ++i) f.normal.push_back(normal[i].get_si());
    f.offset = -normal[n].get_si();
    f.incidence = incidence;
    facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.offset, a.normal) < std::tie(b.offset, b.normal);
  });

  // Face lattice: closure of the facet incidence sets under intersection.
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  const std::uint64_t point_bits = all & ~((std::uint64_t{1} << n) - 1);
  std::set<std::uint64_t> masks{all};
  for (const auto& f : facets_) {
    std::vector<std::uint64_t> add;
    for (auto g : masks) add.push_back(g & f.incidence);
    masks.insert(add.begin(), add.end());
  }

  auto mask_rank = [&](std::uint64_t mask) {
    Matrix rows;
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) rows.push_back(gens[j]);
    }
    return lattice::rank(std::move(rows));
  };

  std::vector<std::pair<std::uint64_t, int>> nonempty;  // (mask, dim)
  std::map<int, int> gen_to_vertex;
  for (auto mask : masks) {
    if ((mask & point_bits) == 0) continue;
    int dim = mask_rank(mask) - 1;
    nonempty.emplace_back(mask, dim);
  }
  std::vector<std::pair<Point, int>> vertex_gens;
  for (auto [mask, dim] : nonempty) {
    if (dim != 0) continue;
    int j = std::countr_zero(mask);
    vertex_gens.emplace_back(points_[j - n], j);
  }
  std::sort(vertex_gens.begin(), vertex_gens.end());
  for (std::size_t v = 0; v < vertex_gens.size(); ++v) {
    vertices_.push_back(vertex_gens[v].first);
    gen_to_vertex[vertex_gens[v].second] = static_cast<int>(v);
  }

  std::vector<Face> faces;
  Face empty;
  faces.push_back(empty);
  for (auto [mask, dim] : nonempty) {
    Face f;
    f.generators = mask;
    f.dim = dim;
    std::vector<bool> nonzero(n, false);
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      if (j < n) {
        f.recession.push_back(j);
        nonzero[j] = true;
        continue;
      }
      auto it = gen_to_vertex.find(j);
      if (it != gen_to_vertex.end()) f.vertices.push_back(it->second);
      const Point& p = points_[j - n];
      for (int i = 0; i < n; ++i) {
        if (p[i] != 0) nonzero[i] = true;
      }
    }
    std::sort(f.vertices.begin(), f.vertices.end());
    f.compact = f.recession.empty();
    f.k = static_cast<int>(std::count(nonzero.begin(), nonzero.end(), true));
    f.interior = f.k == n;
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
      if ((mask & ~facets_[fi].incidence) == 0) f.facet_ids.push_back(static_cast<int>(fi));
    }
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin() + 1, faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices, a.recession) < std::tie(b.dim, b.vertices, b.recession);
  });
  for (std::size_t i = 0; i < faces.size(); ++i) faces[i].id = static_cast<int>(i);
  faces_ = std::move(faces);
}

std::vector<Point> NewtonPolyhedron::vertex_points(const Face& f) const {
  std::vector<Point> out;
  out.reserve(f.vertices.size());
  for (int v : f.vertices) out.push_back(vertices_[v]);
  return out;
}

std::optional<int> NewtonPolyhedron::find_face(const std::set<Point>& vertices,
                                               const std::vector<int>& recession) const {
  for (const auto& f : faces_) {
    if (f.recession != recession || f.vertices.size() != vertices.size()) continue;
    bool match = true;
    for (int v : f.vertices) {
      if (!vertices.count(vertices_[v])) {
        match = false;
        break;
      }
    }
    if (match) return f.id;
  }
  return std::nullopt;
}

std::optional<int> NewtonPolyhedron::vertex_id(const Point& p) const {
  return find_face({p});
}

std::vector<const Face*> NewtonPolyhedron::faces_of_dim(int k, FaceFilter filter) const {
  std::vector<const Face*> out;
  for (const auto& f : faces_) {
    if (f.dim != k) continue;
    if (filter != FaceFilter::all && !f.compact) continue;
    if (filter == FaceFilter::interior_compact && !f.interior) continue;
    out.push_back(&f);
  }
  return out;
}

std::vector<const Face*> NewtonPolyhedron::compact_faces(bool include_empty) const {
  std::vector<const Face*> out;
  for (const auto& f : faces_) {
    if (!f.compact) continue;
    if (f.empty() && !include_empty) continue;
    out.push_back(&f);
  }
  return out;
}

bool NewtonPolyhedron::is_simplicial() const {
  for (const auto& f : faces_) {
    if (f.compact && !f.empty() && static_cast<int>(f.vertices.size()) != f.dim + 1) return false;
  }
  return true;
}

bool NewtonPolyhedron::is_convenient() const {
  for (int i = 0; i < n_; ++i) {
    bool hit = false;
    for (const auto& v : vertices_) {
      bool on_axis = v[i] > 0;
      for (int j = 0; j < n_ && on_axis; ++j) {
        if (j != i && v[j] != 0) on_axis = false;
      }
      if (on_axis) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

int NewtonPolyhedron::vertex_gamma(const Face& vertex) const {
  int count = 0;
  for (const auto& f : faces_) {
    if (f.dim == 2 && contains(f, vertex)) ++count;
  }
  return count;
}

Rational NewtonPolyhedron::newton_order(const Point& nu) const {
  if (!is_convenient()) {
    throw HypothesisError("Newton order needs a convenient polyhedron: not convenient");
  }
  std::optional<Rational> best;
  for (const auto& f : facets_) {
    if (f.offset <= 0) continue;
    long num = 0;
    for (int i = 0; i < n_; ++i) num += f.normal[i] * (1 + nu[i]);
    Rational v = make_rational(num, f.offset);
    if (!best || v < *best) best = v;
  }
  return *best;
}

nlohmann::json NewtonPolyhedron::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["vertices"] = vertices_;
  auto facets = nlohmann::json::array();
  for (const auto& f : facets_) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
  j["facets"] = facets;
  auto faces = nlohmann::json::array();
  for (const auto& f : faces_) {
    faces.push_back({{"id", f.id},
                     {"dim", f.dim},
                     {"vertices", f.vertices},
                     {"recession", f.recession},
                     {"compact", f.compact},
                     {"interior", f.interior},
                     {"k", f.k},
                     {"facets", f.facet_ids}});
  }
  j["faces"] = faces;
  return j;
}

std::vector<int> axis_gaps(const Support& s) {
  std::vector<int> gaps;
  for (int i = 0; i < s.n; ++i) {
    bool met = false;
    for (const auto& p : s.points) {
      bool on_axis = p[i] > 0;
      for (int j = 0; j < s.n && on_axis; ++j) {
        if (j != i && p[j] != 0) on_axis = false;
      }
      if (on_axis) met = true;
    }
    if (!met) gaps.push_back(i);
  }
  return gaps;
}

}  // namespace nspec
