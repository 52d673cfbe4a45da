#ifndef POLYPART_PARTITION_HPP
#define POLYPART_PARTITION_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "polypart/geometry.hpp"

namespace polypart {

using LabelVec = std::vector<double>;

double label_distance(const LabelVec& a, const LabelVec& b);

// finite phase set Z subset R^N with a fixed order used for tie-breaking
struct LabelSet {
  std::vector<LabelVec> labels;

  int count() const { return static_cast<int>(labels.size()); }
  double distance(int i, int j) const { return label_distance(labels[i], labels[j]); }
  void validate() const;  // pairwise distinct

  static LabelSet unit_basis(int n);  // e_1..e_n in R^n
};

enum class PatchKind { Segment, Arc, Planar, Mapped };

// C1 interface patch: curve gamma: [0,1] -> R^2 (Segment / Arc / Mapped) or a
// flat surface piece [0,1]^2 -> R^3 (Planar). Carries the two-sided labels;
// normal(t) points into the phase_plus side.
struct InterfacePatch {
  PatchKind kind = PatchKind::Segment;
  int dim = 2;
  int phase_plus = 0, phase_minus = 0;

  Vec p0, p1;                      // Segment
  Vec center;                      // Arc
  double radius = 0, ang0 = 0, ang1 = 0;
  int orient = 1;                  // Arc/Mapped normal sign

  Vec origin, eu, ev;              // Planar: origin + u*eu + v*ev
  Vec plane_normal;

  std::shared_ptr<InterfacePatch> base;        // Mapped
  std::function<Vec(const Vec&)> fwd;

  static InterfacePatch segment(const Vec& a, const Vec& b, int plus, int minus, int orient = 1);
  static InterfacePatch arc(const Vec& c, double R, double a0, double a1, int plus, int minus,
                            int orient = 1);
  static InterfacePatch planar(const Vec& origin, const Vec& eu, const Vec& ev, int plus,
                               int minus, int orient = 1);
  static InterfacePatch mapped(std::shared_ptr<InterfacePatch> base,
                               std::function<Vec(const Vec&)> fwd, int plus, int minus,
                               int orient);

  Vec point(double t) const;
  Vec velocity(double t) const;    // d gamma / dt
  Vec tangent(double t) const { return normalized(velocity(t)); }
  Vec normal(double t) const;      // unit, towards phase_plus
  double length() const;
  double distance_to(const Vec& p) const;  // exact for Segment/Arc/Planar
  Vec surf_point(double u, double v) const;  // Planar only
  double jump_mass(const LabelSet& labels) const;
};

struct DiscDomain {
  Vec center;
  double radius = 1.0;
};
struct PolygonDomain {
  std::vector<Vec> verts;  // CCW
};
struct DomainDesc {
  enum class Kind { Disc, Polygon } kind = Kind::Disc;
  DiscDomain disc;
  PolygonDomain polygon;

  bool contains(const Vec& p, double tol = 0.0) const;
  double inradius() const;
};

// classifier + patch description of the input u (and its jump set)
struct AnalyticPartition {
  int dim = 2;
  LabelSet labels;
  std::function<int(const Vec&)> classifier;  // total on box
  std::vector<InterfacePatch> patches;
  BBox box;
  int outside_phase = 0;  // z0
  std::optional<DomainDesc> domain;

  int phase_at(const Vec& p) const { return classifier(p); }
  double total_jump_mass() const;
  // sampled invariant checks: normal consistency, patch disjointness
  void validate(int samples_per_patch = 50) const;
};

struct CellRecord {
  ConvexPolytope poly;
  int phase = 0;
};

struct JumpFacet {
  Facet facet;  // normal oriented from phase_minus cell to phase_plus cell
  int phase_plus = 0, phase_minus = 0;
};

// labeled convex cells + derived jump facets (the output w)
struct PolyhedralPartition {
  int dim = 2;
  LabelSet labels;
  std::vector<CellRecord> cells;
  std::vector<JumpFacet> jump_facets;
  BBox box;

  // banded pipeline output: cells cover only a band near the interface and
  // everything else is answered by this classifier (pure far field)
  bool virtual_background = false;
  std::function<int(const Vec&)> background;

  double interface_measure() const;  // total jump facet area
  std::vector<double> cell_volumes_by_phase() const;
};

// point -> phase lookup with a uniform bucket index over the cells
class PartitionLocator {
 public:
  explicit PartitionLocator(const PolyhedralPartition& part);
  int phase_at(const Vec& p) const;

 private:
  const PolyhedralPartition* part_;
  BBox box_;
  int nx_ = 1, ny_ = 1, nz_ = 1;
  double hx_ = 1, hy_ = 1, hz_ = 1;
  std::vector<std::vector<int>> buckets_;
};

// weight matrix W in R^{N x n}
struct WeightMat {
  int rows = 0, cols = 0;
  std::vector<double> a;  // row-major

  double& at(int i, int j) { return a[i * cols + j]; }
  double at(int i, int j) const { return a[i * cols + j]; }
  double frob() const;
  WeightMat& operator+=(const WeightMat& o);
  WeightMat& operator-=(const WeightMat& o);
};

WeightMat outer_weight(const LabelVec& dz, const Vec& nu, int dim);

struct MeasureEntry {
  Facet facet;
  WeightMat weight;
};

// finite sum of (facet, matrix weight) pairs; facets pairwise non-overlapping
struct PolyhedralMeasure {
  int dim = 2;
  std::vector<MeasureEntry> entries;

  double total_variation() const;
};

// per-phase volume fractions of `cell` under `classifier` by seeded rejection
// sampling; `samples` accepted points
std::map<int, double> phase_volumes(const std::function<int(const Vec&)>& classifier,
                                    const ConvexPolytope& cell, int samples, std::uint64_t seed);

// Du for the piecewise-constant partition: one entry per jump facet with
// W = (z+ - z-) tensor nu
PolyhedralMeasure jump_measure(const PolyhedralPartition& p, const LabelSet& labels);

// total variation |a - b| via exact overlay of the two facet systems
double measure_difference_tv(const PolyhedralMeasure& a, const PolyhedralMeasure& b);

// restriction of a measure to facets intersecting a set of flat pieces
// (used for the covered-region residual diagnostics)
double measure_difference_tv_on(const PolyhedralMeasure& a, const PolyhedralMeasure& b,
                                const PolyhedronSet& support);

// MC estimate of |{u = phase} symdiff {w = phase}| over w.box
double symmetric_difference_volume(const std::function<int(const Vec&)>& u,
                                   const PolyhedralPartition& w, int phase, int samples,
                                   std::uint64_t seed);

}  // namespace polypart

#endif
