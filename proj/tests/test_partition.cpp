#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polypart/partition.hpp"
#include "polypart/rng.hpp"

using namespace polypart;

namespace {

ConvexPolytope rect(double x0, double x1, double y0, double y1) {
  return ConvexPolytope::axis_box({x0, y0}, {x1, y1}, 2);
}

// unit square split by x = s into phases {0, 1}
PolyhedralPartition split_square(double s, const LabelSet& labels) {
  PolyhedralPartition w;
  w.dim = 2;
  w.labels = labels;
  w.box = {{0, 0}, {1, 1}};
  w.cells.push_back({rect(0, s, 0, 1), 0});
  w.cells.push_back({rect(s, 1, 0, 1), 1});
  w.jump_facets.push_back({Facet::segment({s, 0}, {s, 1}, {1, 0}), 1, 0});
  return w;
}

}  // namespace

TEST_CASE("phase_volumes: pure cell, half-plane split, centered interface") {
  auto cell = rect(0, 1, 0, 1);
  auto pure = phase_volumes([](const Vec&) { return 3; }, cell, 200, 1);
  CHECK(pure.size() == 1);
  CHECK(pure[3] == doctest::Approx(1.0));

  auto split = phase_volumes([](const Vec& p) { return p.x < 0.3 ? 0 : 1; }, cell, 1000000, 42);
  CHECK(std::abs(split[0] - 0.3) < 3e-3);
  CHECK(std::abs(split[1] - 0.7) < 3e-3);
  double sum = 0;
  for (auto& [k, v] : split) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  auto centered = phase_volumes([](const Vec& p) { return p.y < 0.5 ? 0 : 1; }, cell, 100000, 7);
  CHECK(std::abs(centered[0] - 0.5) < 6e-3);
}

TEST_CASE("phase_volumes: determinism given seed") {
  auto cell = rect(0, 1, 0, 1);
  auto a = phase_volumes([](const Vec& p) { return p.x + p.y < 0.9 ? 0 : 1; }, cell, 5000, 99);
  auto b = phase_volumes([](const Vec& p) { return p.x + p.y < 0.9 ? 0 : 1; }, cell, 5000, 99);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
}

TEST_CASE("jump_measure: empty, split square, checkerboard") {
  LabelSet basis2 = LabelSet::unit_basis(2);

  PolyhedralPartition single;
  single.dim = 2;
  single.labels = basis2;
  single.box = {{0, 0}, {1, 1}};
  single.cells.push_back({rect(0, 1, 0, 1), 0});
  CHECK(jump_measure(single, basis2).total_variation() == doctest::Approx(0.0));

  auto w = split_square(0.5, basis2);
  auto m = jump_measure(w, basis2);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0].weight.frob() == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.total_variation() == doctest::Approx(std::sqrt(2.0)));

  // 2x2 checkerboard, two labels at distance 1
  LabelSet two;
  two.labels = {{0.0, 0.0}, {1.0, 0.0}};
  PolyhedralPartition cb;
  cb.dim = 2;
  cb.labels = two;
  cb.box = {{0, 0}, {2, 2}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      cb.cells.push_back({rect(i, i + 1, j, j + 1), (i + j) % 2});
  cb.jump_facets.push_back({Facet::segment({1, 0}, {1, 1}, {1, 0}), 1, 0});
  cb.jump_facets.push_back({Facet::segment({1, 1}, {1, 2}, {-1, 0}), 0, 1});
  cb.jump_facets.push_back({Facet::segment({0, 1}, {1, 1}, {0, 1}), 1, 0});
  cb.jump_facets.push_back({Facet::segment({1, 1}, {2, 1}, {0, -1}), 0, 1});
  CHECK(jump_measure(cb, two).total_variation() == doctest::Approx(4.0));
}

TEST_CASE("jump_measure TV invariant under distance-preserving relabeling") {
  LabelSet basis3 = LabelSet::unit_basis(3);
  PolyhedralPartition w;
  w.dim = 2;
  w.labels = basis3;
  w.box = {{0, 0}, {1, 1}};
  w.cells.push_back({rect(0, 0.3, 0, 1), 0});
  w.cells.push_back({rect(0.3, 0.8, 0, 1), 1});
  w.cells.push_back({rect(0.8, 1, 0, 1), 2});
  w.jump_facets.push_back({Facet::segment({0.3, 0}, {0.3, 1}, {1, 0}), 1, 0});
  w.jump_facets.push_back({Facet::segment({0.8, 0}, {0.8, 1}, {1, 0}), 2, 1});
  const double tv = jump_measure(w, basis3).total_variation();

  // cyclic permutation of e_1, e_2, e_3 preserves pairwise distances
  PolyhedralPartition v = w;
  for (auto& c : v.cells) c.phase = (c.phase + 1) % 3;
  for (auto& jf : v.jump_facets) {
    jf.phase_plus = (jf.phase_plus + 1) % 3;
    jf.phase_minus = (jf.phase_minus + 1) % 3;
  }
  CHECK(jump_measure(v, basis3).total_variation() == doctest::Approx(tv).epsilon(1e-12));
}

TEST_CASE("measure_difference_tv: identical, weight-vs-zero, disjoint facets") {
  LabelSet basis2 = LabelSet::unit_basis(2);
  auto w = split_square(0.5, basis2);
  auto m = jump_measure(w, basis2);
  CHECK(measure_difference_tv(m, m) == doctest::Approx(0.0));

  PolyhedralMeasure zero;
  zero.dim = 2;
  CHECK(measure_difference_tv(m, zero) == doctest::Approx(std::sqrt(2.0)));
  CHECK(measure_difference_tv(zero, m) == doctest::Approx(std::sqrt(2.0)));

  PolyhedralMeasure two;
  two.dim = 2;
  two.entries.push_back(
      {Facet::segment({0, 0}, {1, 0}, {0, 1}), outer_weight({1.0, 0.0}, {0, 1}, 2)});
  two.entries.push_back(
      {Facet::segment({0, 2}, {1, 2}, {0, 1}), outer_weight({1.0, 0.0}, {0, 1}, 2)});
  CHECK(measure_difference_tv(two, zero) == doctest::Approx(2.0));
}

TEST_CASE("measure_difference_tv: partial overlap on a shared line") {
  PolyhedralMeasure a, b;
  a.dim = b.dim = 2;
  a.entries.push_back({Facet::segment({0, 0}, {2, 0}, {0, 1}), outer_weight({1.0}, {0, 1}, 2)});
  b.entries.push_back({Facet::segment({1, 0}, {3, 0}, {0, 1}), outer_weight({1.0}, {0, 1}, 2)});
  // overlap [1,2] cancels; [0,1] and [2,3] contribute 1 each
  CHECK(measure_difference_tv(a, b) == doctest::Approx(2.0));

  // same geometry, different weights: overlap contributes |Wa - Wb|
  b.entries[0].weight = outer_weight({3.0}, {0, 1}, 2);
  CHECK(measure_difference_tv(a, b) == doctest::Approx(1.0 + 2.0 * 1.0 + 3.0));
}

TEST_CASE("measure_difference_tv: 3D coplanar triangles") {
  PolyhedralMeasure a, b;
  a.dim = b.dim = 3;
  Simplex t;
  t.npts = 3;
  t.p = {Vec{0, 0, 0}, Vec{1, 0, 0}, Vec{0, 1, 0}};
  Facet fa;
  fa.dim = 3;
  fa.normal = {0, 0, 1};
  fa.simplexes = {t};
  a.entries.push_back({fa, outer_weight({1.0}, {0, 0, 1}, 3)});
  b = a;
  CHECK(measure_difference_tv(a, b) == doctest::Approx(0.0));
  // shifted copy
  b.entries[0].facet.simplexes[0].p = {Vec{0.5, 0, 0}, Vec{1.5, 0, 0}, Vec{0.5, 1, 0}};
  const double tv = measure_difference_tv(a, b);
  CHECK(tv > 0.0);
  CHECK(tv <= 1.0 + 1e-9);
}

TEST_CASE("property: measure_difference_tv triangle inequality") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    auto random_measure = [&](int nfacets) {
      PolyhedralMeasure m;
      m.dim = 2;
      double s = rng.uniform(0, 1);
      const double line_y = trial % 2 == 0 ? 0.0 : 1.0;
      for (int k = 0; k < nfacets; ++k) {
        const double len = rng.uniform(0.1, 0.8);
        m.entries.push_back({Facet::segment({s, line_y}, {s + len, line_y}, {0, 1}),
                             outer_weight({rng.uniform(-2, 2), rng.uniform(-2, 2)}, {0, 1}, 2)});
        s += len + rng.uniform(0.01, 0.3);  // keep facets disjoint
      }
      return m;
    };
    auto a = random_measure(1 + static_cast<int>(rng.next() % 3));
    auto b = random_measure(1 + static_cast<int>(rng.next() % 3));
    auto c = random_measure(1 + static_cast<int>(rng.next() % 3));
    const double ac = measure_difference_tv(a, c);
    const double ab = measure_difference_tv(a, b);
    const double bc = measure_difference_tv(b, c);
    CHECK(ac <= ab + bc + 1e-9);
  }
}

TEST_CASE("symmetric_difference_volume: agreement, shifted interface, absent phase") {
  LabelSet basis2 = LabelSet::unit_basis(2);
  auto w = split_square(0.5, basis2);
  auto u_same = [](const Vec& p) { return p.x < 0.5 ? 0 : 1; };
  CHECK(symmetric_difference_volume(u_same, w, 0, 200000, 3) < 2e-3);

  const double t = 0.13;
  auto u_shift = [&](const Vec& p) { return p.x < 0.5 + t ? 0 : 1; };
  const double sd = symmetric_difference_volume(u_shift, w, 0, 400000, 5);
  CHECK(sd == doctest::Approx(t).epsilon(0.05));

  CHECK(symmetric_difference_volume(u_same, w, 7, 50000, 11) == doctest::Approx(0.0));
}

TEST_CASE("partition volumes sum to box volume") {
  LabelSet basis2 = LabelSet::unit_basis(2);
  auto w = split_square(0.37, basis2);
  const auto vols = w.cell_volumes_by_phase();
  CHECK(vols[0] + vols[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("InterfacePatch: geometry and classifier consistency") {
  AnalyticPartition u;
  u.dim = 2;
  u.labels = LabelSet::unit_basis(2);
  u.box = {{0, 0}, {1, 1}};
  const Vec c{0.5, 0.5};
  const double R = 0.3;
  u.classifier = [=](const Vec& p) { return dist(p, c) < R ? 0 : 1; };
  // outward normal points into phase 1 (outside)
  u.patches.push_back(InterfacePatch::arc(c, R, 0, 2 * M_PI, 1, 0));
  u.outside_phase = 1;
  u.validate();
  CHECK(u.patches[0].length() == doctest::Approx(2 * M_PI * R));
  CHECK(u.total_jump_mass() == doctest::Approx(2 * M_PI * R * std::sqrt(2.0)));
  CHECK(u.patches[0].distance_to({0.5, 0.5}) == doctest::Approx(R));
  CHECK(u.patches[0].distance_to({0.5 + 2 * R, 0.5}) == doctest::Approx(R));

  // arc distance honors the angular window
  auto half = InterfacePatch::arc(c, R, 0, M_PI, 1, 0);
  CHECK(half.distance_to({0.5, 0.5 - 2 * R}) ==
        doctest::Approx(dist(Vec{0.5, 0.5 - 2 * R}, half.point(0.0))));
}

TEST_CASE("PartitionLocator handles cell boundaries") {
  LabelSet basis2 = LabelSet::unit_basis(2);
  auto w = split_square(0.5, basis2);
  PartitionLocator loc(w);
  CHECK(loc.phase_at({0.25, 0.5}) == 0);
  CHECK(loc.phase_at({0.75, 0.5}) == 1);
  const int on_boundary = loc.phase_at({0.5, 0.5});
  CHECK((on_boundary == 0 || on_boundary == 1));
}
