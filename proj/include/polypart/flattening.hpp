#ifndef POLYPART_FLATTENING_HPP
#define POLYPART_FLATTENING_HPP

#include <vector>

#include "polypart/partition.hpp"

namespace polypart {

inline constexpr double kChartMinRadius = 1e-4;

// C1 radial cutoff: 1 on B_{(1-eps)r}, 0 outside B_r, cubic smoothstep in the
// annulus; max slope 1.5/(eps r) <= 2/(eps r)
struct CutoffProfile {
  double eps = 0.1, r = 1.0;

  double value(double s) const;
  double slope(double s) const;
  double max_slope() const { return 1.5 / (eps * r); }
};

// local graph chart at y = gamma(t): isometry takes y to the origin and the
// patch normal to e_n; the patch is the graph of g over [-r, r] there
struct Chart {
  int dim = 2;
  Vec center;          // y
  double radius = 0;   // r
  Isometry to_chart;   // I_y
  Vec nu;              // normal at y (world)
  Vec tan_dir;         // chart e_1 direction (world)
  int patch_index = -1;
  double t_center = 0;
  double t_ball_lo = 0, t_ball_hi = 0;  // params with gamma(t) inside B_r(y)
  int phase_plus = 0, phase_minus = 0;
  double deficit = 0;  // graph-vs-jump-set mismatch inside the chart window

  // graph function in chart coordinates
  enum class GraphForm { Zero, Circle, Numeric } form = GraphForm::Zero;
  double circ_cy = 0;  // chart-frame circle center height (Circle form)
  double circ_r = 0;
  const InterfacePatch* patch = nullptr;

  double g(double xi) const;
  double dg(double xi) const;
};

// f(x) = x - psi(|x-y|) g(Pi I x) nu inside B_r(y), identity outside
struct LocalDiffeo {
  Chart chart;
  CutoffProfile cutoff;

  Vec apply(const Vec& x) const;
  Vec apply_inverse(const Vec& z) const;  // Newton on the axial offset
  Mat3 jacobian(const Vec& x) const;
  // operator norm of Df - Id at x (rank-one, exact)
  double jacobian_defect(const Vec& x) const;
};

// composition f = f_1 o ... o f_M over pairwise-disjoint balls
struct FlatteningMap {
  int dim = 2;
  double eps = 0.1;
  std::vector<LocalDiffeo> locals;

  Vec apply(const Vec& x) const;
  Vec apply_inverse(const Vec& z) const;
  Mat3 jacobian(const Vec& x) const;
  double defect_sum(const Vec& x) const;  // |Df - Id| + |f - x| at x
  int local_at(const Vec& x) const;       // index of owning ball or -1

 private:
  friend FlatteningMap compose(const AnalyticPartition&, const std::vector<Chart>&, double);
  // bucket index over ball centers
  double bucket_size_ = 1.0;
  std::vector<std::pair<std::int64_t, int>> buckets_;  // sorted (cell key, local idx)
  void build_index();
};

struct FlatPieceData {
  int chart_index = -1;
  int phase_plus = 0, phase_minus = 0;
  Vec normal;
  double deficit = 0;  // H^{n-1}(B'_{(1-eps)r} \ P-hat)
};

struct FlatPieces {
  PolyhedronSet set;
  std::vector<FlatPieceData> data;
  PolyhedralMeasure mustar;
};

// maximal admissible chart at gamma_patch(t); throws JunctionTooClose when no
// r >= kChartMinRadius works
Chart fit_chart(const AnalyticPartition& u, int patch_index, double t, double eps);

CutoffProfile cutoff_profile(double eps, double r);

// disjoint-ball cover of the jump set leaving < eps uncovered jump mass;
// throws BudgetInfeasible (with the achieved residual) when junction geometry
// forbids the budget
std::vector<Chart> greedy_cover(const AnalyticPartition& u, double eps);

// exact interval bookkeeping of the mass outside all chart balls
double uncovered_jump_mass(const AnalyticPartition& u, const std::vector<Chart>& charts);

FlatteningMap compose(const AnalyticPartition& u, const std::vector<Chart>& charts, double eps);

FlatPieces flat_pieces(const AnalyticPartition& u, const std::vector<Chart>& charts, double eps);

}  // namespace polypart

#endif
