#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polypart/geometry.hpp"
#include "polypart/rng.hpp"

using namespace polypart;

namespace {

std::vector<HalfSpace> unit_square_planes() {
  return {{{1, 0, 0}, 0.5}, {{-1, 0, 0}, 0.5}, {{0, 1, 0}, 0.5}, {{0, -1, 0}, 0.5}};
}

Isometry random_isometry(SplitMix64& rng, int dim) {
  const double angle = rng.uniform(0, 2 * M_PI);
  Mat3 q = rotation2(angle);
  if (dim == 3) {
    const Vec axis = normalized(Vec{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    q = rotation_between(Vec{0, 0, 1}, axis, 3).mul(q);
  }
  const Vec b{rng.uniform(-2, 2), rng.uniform(-2, 2), dim == 3 ? rng.uniform(-2, 2) : 0.0};
  return Isometry(q, b, dim);
}

}  // namespace

TEST_CASE("halfspace_intersection: unit square") {
  auto p = halfspace_intersection(2, unit_square_planes());
  CHECK(p.verts.size() == 4);
  CHECK(p.volume() == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& v : p.verts) {
    CHECK(std::abs(std::abs(v.x) - 0.5) < 1e-9);
    CHECK(std::abs(std::abs(v.y) - 0.5) < 1e-9);
  }
  // every vertex satisfies every constraint
  for (const auto& v : p.verts)
    for (const auto& h : p.planes) CHECK(h.signed_dist(v) <= 1e-9);
}

TEST_CASE("halfspace_intersection: redundant plane dropped") {
  auto planes = unit_square_planes();
  planes.push_back({{1, 0, 0}, 2.0});  // x <= 2, redundant
  auto p = halfspace_intersection(2, planes);
  CHECK(p.verts.size() == 4);
  CHECK(p.face_count() == 4);
  CHECK(p.volume() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("halfspace_intersection: regular hexagon area") {
  std::vector<HalfSpace> planes;
  // circumradius 1 -> apothem cos(pi/6)
  for (int k = 0; k < 6; ++k) {
    const double a = (2 * M_PI * k) / 6 + M_PI / 6;
    planes.push_back({{std::cos(a), std::sin(a), 0}, std::cos(M_PI / 6)});
  }
  auto p = halfspace_intersection(2, planes);
  CHECK(p.verts.size() == 6);
  CHECK(p.volume() == doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("halfspace_intersection: errors") {
  CHECK_THROWS_AS(halfspace_intersection(2, {{{1, 0, 0}, 0.5}, {{0, 1, 0}, 0.5}, {{0, -1, 0}, 0.5}}),
                  UnboundedCell);
  CHECK_THROWS_AS(halfspace_intersection(
                      2, {{{1, 0, 0}, -1.0}, {{-1, 0, 0}, -1.0}, {{0, 1, 0}, 1.0}, {{0, -1, 0}, 1.0}}),
                  EmptyCell);
}

TEST_CASE("halfspace_intersection: 3D cube and clipped corner") {
  std::vector<HalfSpace> planes;
  for (int c = 0; c < 3; ++c)
    for (int s : {-1, 1}) {
      Vec n{};
      n[c] = s;
      planes.push_back({n, 0.5});
    }
  auto p = halfspace_intersection(3, planes);
  CHECK(p.verts.size() == 8);
  CHECK(p.face_count() == 6);
  CHECK(p.volume() == doctest::Approx(1.0).epsilon(1e-12));

  // slice off one corner
  planes.push_back({normalized(Vec{1, 1, 1}), 0.5 * std::sqrt(3.0) - 0.1});
  auto q = halfspace_intersection(3, planes);
  CHECK(q.face_count() == 7);
  CHECK(q.volume() < 1.0);
  CHECK(q.volume() > 0.99 * (1.0 - 1e-2));
}

TEST_CASE("clipping construction matches brute-force vertex enumeration") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 3;
    std::vector<HalfSpace> planes;
    // random directions around a box, offsets keep origin inside
    for (int c = 0; c < dim; ++c)
      for (int s : {-1, 1}) {
        Vec n{};
        n[c] = s;
        planes.push_back({n, 1.0});
      }
    const int extra = 3 + static_cast<int>(rng.next() % 5);
    for (int k = 0; k < extra; ++k) {
      Vec n{rng.uniform(-1, 1), rng.uniform(-1, 1), dim == 3 ? rng.uniform(-1, 1) : 0.0};
      if (norm(n) < 0.1) continue;
      planes.push_back({normalized(n), rng.uniform(0.3, 1.2)});
    }
    auto p = halfspace_intersection(dim, planes);
    auto brute = enumerate_vertices_bruteforce(dim, planes);
    REQUIRE(!brute.empty());
    // same vertex sets within 1e-9
    for (const auto& v : p.verts) {
      double best = 1e300;
      for (const auto& w : brute) best = std::min(best, dist(v, w));
      CHECK(best < 1e-8);
    }
    for (const auto& w : brute) {
      double best = 1e300;
      for (const auto& v : p.verts) best = std::min(best, dist(v, w));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("facet_measure: segments and split square") {
  CHECK(facet_measure(Facet::segment({0, 0}, {1, 0}, {0, 1, 0})) == doctest::Approx(1.0));
  CHECK(facet_measure(Facet::segment({0, 0}, {3, 4}, normalized(Vec{-4, 3}))) ==
        doctest::Approx(5.0));
  // unit square facet in 3D as two triangles
  Facet f;
  f.dim = 3;
  f.normal = {0, 0, 1};
  Simplex t1, t2;
  t1.npts = t2.npts = 3;
  t1.p = {Vec{0, 0, 0}, Vec{1, 0, 0}, Vec{1, 1, 0}};
  t2.p = {Vec{0, 0, 0}, Vec{1, 1, 0}, Vec{0, 1, 0}};
  f.simplexes = {t1, t2};
  CHECK(facet_measure(f) == doctest::Approx(1.0).epsilon(1e-12));

  Facet bad = Facet::segment({0, 0}, {0, 0}, {0, 1, 0});
  CHECK_THROWS_AS(facet_measure(bad), DegenerateFacet);
}

TEST_CASE("set_distance: parallel, collinear, perpendicular segments") {
  auto make_piece = [](const Vec& a, const Vec& b) {
    FlatPolyhedron fp;
    const Vec t = normalized(b - a);
    const Vec n = perp2(t);
    fp.facets.push_back(Facet::segment(a, b, n));
    fp.plane = {n, dot(n, a)};
    fp.to_flat = Isometry::frame_to_standard(a, n, 2);
    return fp;
  };
  PolyhedronSet set;
  set.dim = 2;
  set.pieces.push_back(make_piece({0, 0}, {1, 0}));
  set.pieces.push_back(make_piece({0, 1}, {1, 1}));
  set.pieces.push_back(make_piece({2, 0}, {3, 0}));
  set.pieces.push_back(make_piece({2, 1}, {2, 2}));
  set.validate();

  CHECK(set.set_distance(0, 1) == doctest::Approx(1.0));          // parallel at height 1
  CHECK(1.0 / (5.0 * 2.0) * set.set_distance(0, 1) == doctest::Approx(0.1));  // delta_0 at n=2
  CHECK(set.set_distance(0, 2) == doctest::Approx(1.0));          // collinear
  CHECK(set.set_distance(0, 3) == doctest::Approx(std::sqrt(2.0)));  // perpendicular

  // brute-force over sampled point pairs agrees with the closed form
  double brute = 1e300;
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 200; ++j) {
      const Vec p{i / 200.0, 0.0};
      const Vec q{2.0, 1.0 + j / 200.0};
      brute = std::min(brute, dist(p, q));
    }
  CHECK(set.set_distance(0, 3) == doctest::Approx(brute).epsilon(1e-4));
}

TEST_CASE("Isometry: inverse round-trip on random points") {
  SplitMix64 rng(7);
  for (int dim : {2, 3}) {
    const Isometry iso = random_isometry(rng, dim);
    const Isometry id = iso.compose(iso.inverse());
    for (int k = 0; k < 100; ++k) {
      const Vec p{rng.uniform(-5, 5), rng.uniform(-5, 5), dim == 3 ? rng.uniform(-5, 5) : 0.0};
      CHECK(dist(iso.apply_inverse(iso.apply(p)), p) < 1e-12);
      CHECK(dist(id.apply(p), p) < 1e-12);
    }
  }
}

TEST_CASE("property: volume invariant under isometry conjugation") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 3;
    const Isometry iso = random_isometry(rng, dim);
    std::vector<HalfSpace> planes;
    for (int c = 0; c < dim; ++c)
      for (int s : {-1, 1}) {
        Vec n{};
        n[c] = s;
        planes.push_back({n, rng.uniform(0.4, 1.5)});
      }
    Vec extra = dim == 2 ? Vec{rng.uniform(-1, 1), rng.uniform(-1, 1)}
                         : Vec{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (norm(extra) > 0.1) planes.push_back({normalized(extra), rng.uniform(0.4, 1.2)});

    auto p = halfspace_intersection(dim, planes);
    std::vector<HalfSpace> moved;
    for (const auto& h : planes) {
      const Vec n2 = iso.apply_dir(h.normal);
      moved.push_back({n2, h.offset + dot(n2, iso.translation)});
    }
    auto q = halfspace_intersection(dim, moved);
    CHECK(q.volume() == doctest::Approx(p.volume()).epsilon(1e-9));
  }
}

TEST_CASE("property: facet_measure invariant under isometry") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Vec b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (dist(a, b) < 1e-3) continue;
    const Vec n = normalized(perp2(b - a));
    const Facet f = Facet::segment(a, b, n);
    const Isometry iso = random_isometry(rng, 2);
    const Facet g = Facet::segment(iso.apply(a), iso.apply(b), iso.apply_dir(n));
    CHECK(facet_measure(g) == doctest::Approx(facet_measure(f)).epsilon(1e-12));
  }
}

TEST_CASE("point/segment/triangle distances") {
  CHECK(dist_point_segment({0, 2}, {-1, 0}, {1, 0}) == doctest::Approx(2.0));
  CHECK(dist_point_segment({3, 0}, {-1, 0}, {1, 0}) == doctest::Approx(2.0));
  CHECK(dist_segment_segment({0, 0}, {1, 0}, {0, 1}, {1, 1}) == doctest::Approx(1.0));
  CHECK(dist_segment_segment({0, 0, 0}, {1, 0, 0}, {0.5, -1, 1}, {0.5, 1, 1}) ==
        doctest::Approx(1.0));
  CHECK(dist_point_triangle({0, 0, 2}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}) == doctest::Approx(2.0));
  CHECK(dist_point_triangle({-1, -1, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}) ==
        doctest::Approx(std::sqrt(2.0)));

  Simplex t1, t2;
  t1.npts = t2.npts = 3;
  t1.p = {Vec{0, 0, 0}, Vec{1, 0, 0}, Vec{0, 1, 0}};
  t2.p = {Vec{0, 0, 1}, Vec{1, 0, 1}, Vec{0, 1, 1}};
  CHECK(dist_simplex_simplex(t1, t2) == doctest::Approx(1.0));
}
