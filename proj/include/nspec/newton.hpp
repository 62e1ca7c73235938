#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "nspec/fracpoly.hpp"
#include "nspec/polyparse.hpp"

namespace nspec {

/// Supporting inequality normal . nu >= offset of the Newton polyhedron.
/// The normal is componentwise nonnegative and primitive.
struct Facet {
  Point normal;
  std::int64_t offset = 0;
  std::uint64_t incidence = 0;  // generator bitmask of the facet
};

/// A face of Gamma_+: the convex hull of `vertices` plus the orthant spanned
/// by the axis directions in `recession`.
struct Face {
  int id = 0;
  std::vector<int> vertices;   // indices into NewtonPolyhedron::vertices()
  std::vector<int> recession;  // axis indices (0-based) of recession rays
  int dim = -1;                // -1 only for the empty face
  bool compact = true;
  bool interior = false;       // not contained in any coordinate hyperplane
  int k = 0;                   // number of coordinates not identically zero
  std::vector<int> facet_ids;
  std::uint64_t generators = 0;

  bool empty() const { return dim < 0; }
  /// Dimension of the cone over the face; 0 for the empty face.
  int cone_dim() const { return dim + 1; }
};

enum class FaceFilter { all, compact, interior_compact };

/// Gamma_+(f) with its full face lattice, built from the homogenized cone
/// generated by (nu, 1) for support points and (e_i, 0) for the axes.
class NewtonPolyhedron {
 public:
  /// Largest support accepted (one bit per generator).
  static constexpr int kMaxGenerators = 64;

  explicit NewtonPolyhedron(const Support& support);

  int n() const { return n_; }
  const std::vector<Point>& support_points() const { return points_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }
  const Face& empty_face() const { return faces_.front(); }

  /// a <= b in the face lattice.
  bool contains(const Face& big, const Face& small) const {
    return (small.generators & ~big.generators) == 0;
  }

  std::vector<Point> vertex_points(const Face& f) const;
  /// The face whose vertex set and recession set are exactly these.
  std::optional<int> find_face(const std::set<Point>& vertices, const std::vector<int>& recession = {}) const;
  std::optional<int> vertex_id(const Point& p) const;  // face id of a vertex

  std::vector<const Face*> faces_of_dim(int k, FaceFilter filter = FaceFilter::all) const;
  std::vector<const Face*> compact_faces(bool include_empty = true) const;

  bool is_simplicial() const;
  bool is_convenient() const;

  /// Number of 2-dimensional faces (compact or not) containing the vertex.
  int vertex_gamma(const Face& vertex) const;

  /// v_f(x^nu) = min over facets with positive offset of a.(1+nu)/a_0.
  Rational newton_order(const Point& nu) const;

  nlohmann::json to_json() const;

 private:
  int n_;
  std::vector<Point> points_;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
};

/// Axes (0-based) not met by the support: {i | Supp f does not meet N e_i}.
std::vector<int> axis_gaps(const Support& s);

}  // namespace nspec
