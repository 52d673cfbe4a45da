#ifndef POLYPART_GEOMETRY_HPP
#define POLYPART_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "polypart/errors.hpp"
#include "polypart/vec.hpp"

namespace polypart {

// coordinate coincidence tolerance (coordinates are O(1))
inline constexpr double kGeomTol = 1e-9;
// orthogonality / unit-length tolerance
inline constexpr double kOrthoTol = 1e-12;

// Rigid motion x -> Q x + b with Q in SO(n).
struct Isometry {
  Mat3 rotation;
  Vec translation;
  int dim = 2;

  Isometry() = default;
  Isometry(const Mat3& q, const Vec& b, int n);

  Vec apply(const Vec& x) const { return rotation.apply(x) + translation; }
  Vec apply_inverse(const Vec& x) const { return rotation.apply_transposed(x - translation); }
  // direction vectors rotate without translating
  Vec apply_dir(const Vec& v) const { return rotation.apply(v); }
  Vec apply_inverse_dir(const Vec& v) const { return rotation.apply_transposed(v); }

  Isometry inverse() const;
  // (this ∘ other)(x) = this(other(x))
  Isometry compose(const Isometry& other) const;

  static Isometry identity(int n) { return Isometry(Mat3::identity(), Vec{}, n); }
  // isometry with I(center) = image and Q mapping `axis` to e_n (2D: e_2)
  static Isometry frame_to_standard(const Vec& center, const Vec& axis, int n);
};

// closed half-space {x : normal·x <= offset}, |normal| = 1
struct HalfSpace {
  Vec normal;
  double offset = 0.0;

  double signed_dist(const Vec& p) const { return dot(normal, p) - offset; }
};

// hyperplane {x : normal·x = offset}
struct Hyperplane {
  Vec normal;
  double offset = 0.0;

  double signed_dist(const Vec& p) const { return dot(normal, p) - offset; }
};

// Bounded convex polytope in R^2 or R^3 as half-space intersection with a
// cached vertex enumeration. Faces (index loops into verts) are kept per
// non-redundant half-space.
struct ConvexPolytope {
  int dim = 2;
  std::vector<HalfSpace> planes;               // non-redundant, one per face
  std::vector<Vec> verts;                      // 2D: CCW order
  std::vector<std::vector<int>> faces;         // per plane; ordered loops in 3D

  double volume() const;
  Vec centroid() const;
  BBox bbox() const;
  bool contains(const Vec& p, double tol = kGeomTol) const;
  // min over faces of distance from `center` to the face plane
  double inradius_from(const Vec& center) const;
  double circumradius_from(const Vec& center) const;
  int face_count() const { return static_cast<int>(planes.size()); }

  // clip by one more half-space (empty result -> nullopt)
  std::optional<ConvexPolytope> clipped(const HalfSpace& h, double tol = kGeomTol) const;

  static ConvexPolytope axis_box(const Vec& lo, const Vec& hi, int n);
};

// intersection of closed half-spaces; throws UnboundedCell / EmptyCell
ConvexPolytope halfspace_intersection(int dim, const std::vector<HalfSpace>& halfspaces);

// brute-force vertex enumeration by pairwise/triple constraint intersection;
// test oracle for halfspace_intersection
std::vector<Vec> enumerate_vertices_bruteforce(int dim, const std::vector<HalfSpace>& halfspaces);

// (n-1)-simplex: segment in 2D (2 points), triangle in 3D (3 points)
struct Simplex {
  std::array<Vec, 3> p;
  int npts = 2;

  double measure() const;  // length / area
  Vec centroid() const;
};

// (n-1)-dimensional facet: coplanar simplex fan with a unit normal
struct Facet {
  int dim = 2;
  Vec normal;
  std::vector<Simplex> simplexes;

  static Facet segment(const Vec& a, const Vec& b, const Vec& normal);
  static Facet from_polygon(const std::vector<Vec>& loop, const Vec& normal);  // 3D

  void validate() const;  // coplanarity / unit normal / degeneracy checks
  BBox bbox() const;
};

// H^{n-1} measure of a facet; throws DegenerateFacet
double facet_measure(const Facet& f);

// flat (n-1)-polyhedron: facets in a common supporting hyperplane, with the
// isometry mapping that hyperplane onto R^{n-1} x {0}
struct FlatPolyhedron {
  std::vector<Facet> facets;
  Hyperplane plane;
  Isometry to_flat;

  double measure() const;
  BBox bbox() const;
};

struct PolyhedronSet {
  int dim = 2;
  std::vector<FlatPolyhedron> pieces;

  void validate() const;  // disjointness, in-plane tolerance
  // exact distance between pieces i and l (min over simplex pairs)
  double set_distance(int i, int l) const;
  // min over all pairs; +inf when fewer than two pieces
  double min_pairwise_distance() const;
};

// primitive distances
double dist_point_segment(const Vec& p, const Vec& a, const Vec& b);
double dist_segment_segment(const Vec& a0, const Vec& a1, const Vec& b0, const Vec& b1);
double dist_point_triangle(const Vec& p, const Vec& t0, const Vec& t1, const Vec& t2);
double dist_simplex_simplex(const Simplex& a, const Simplex& b);

}  // namespace polypart

#endif
