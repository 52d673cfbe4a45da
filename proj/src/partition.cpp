#include "polypart/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "polypart/quadrature.hpp"
#include "polypart/rng.hpp"

namespace polypart {

double label_distance(const LabelVec& a, const LabelVec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

void LabelSet::validate() const {
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (label_distance(labels[i], labels[j]) < 1e-12)
        throw std::runtime_error("LabelSet: labels not pairwise distinct");
}

LabelSet LabelSet::unit_basis(int n) {
  LabelSet ls;
  for (int i = 0; i < n; ++i) {
    LabelVec v(n, 0.0);
    v[i] = 1.0;
    ls.labels.push_back(v);
  }
  return ls;
}

// ---------------------------------------------------------------------------
// InterfacePatch

InterfacePatch InterfacePatch::segment(const Vec& a, const Vec& b, int plus, int minus,
                                       int orient) {
  InterfacePatch p;
  p.kind = PatchKind::Segment;
  p.dim = 2;
  p.p0 = a;
  p.p1 = b;
  p.phase_plus = plus;
  p.phase_minus = minus;
  p.orient = orient;
  return p;
}

InterfacePatch InterfacePatch::arc(const Vec& c, double R, double a0, double a1, int plus,
                                   int minus, int orient) {
  InterfacePatch p;
  p.kind = PatchKind::Arc;
  p.dim = 2;
  p.center = c;
  p.radius = R;
  p.ang0 = a0;
  p.ang1 = a1;
  p.phase_plus = plus;
  p.phase_minus = minus;
  p.orient = orient;
  return p;
}

InterfacePatch InterfacePatch::planar(const Vec& origin, const Vec& eu, const Vec& ev, int plus,
                                      int minus, int orient) {
  InterfacePatch p;
  p.kind = PatchKind::Planar;
  p.dim = 3;
  p.origin = origin;
  p.eu = eu;
  p.ev = ev;
  p.plane_normal = normalized(cross(eu, ev));
  p.phase_plus = plus;
  p.phase_minus = minus;
  p.orient = orient;
  return p;
}

InterfacePatch InterfacePatch::mapped(std::shared_ptr<InterfacePatch> base,
                                      std::function<Vec(const Vec&)> fwd, int plus, int minus,
                                      int orient) {
  InterfacePatch p;
  p.kind = PatchKind::Mapped;
  p.dim = base->dim;
  p.base = std::move(base);
  p.fwd = std::move(fwd);
  p.phase_plus = plus;
  p.phase_minus = minus;
  p.orient = orient;
  return p;
}

Vec InterfacePatch::point(double t) const {
  switch (kind) {
    case PatchKind::Segment:
      return p0 + (p1 - p0) * t;
    case PatchKind::Arc: {
      const double a = ang0 + (ang1 - ang0) * t;
      return center + Vec{radius * std::cos(a), radius * std::sin(a)};
    }
    case PatchKind::Planar:
      return origin + (eu + ev) * t;  // diagonal; representative only
    case PatchKind::Mapped:
      return fwd(base->point(t));
  }
  return {};
}

Vec InterfacePatch::velocity(double t) const {
  switch (kind) {
    case PatchKind::Segment:
      return p1 - p0;
    case PatchKind::Arc: {
      const double a = ang0 + (ang1 - ang0) * t;
      const double da = ang1 - ang0;
      return Vec{-radius * std::sin(a) * da, radius * std::cos(a) * da};
    }
    case PatchKind::Planar:
      return eu + ev;
    case PatchKind::Mapped: {
      const double h = 1e-6;
      const double lo = std::max(0.0, t - h), hi = std::min(1.0, t + h);
      return (point(hi) - point(lo)) / (hi - lo);
    }
  }
  return {};
}

Vec InterfacePatch::normal(double t) const {
  if (kind == PatchKind::Planar) return plane_normal * static_cast<double>(orient);
  if (kind == PatchKind::Arc) {
    const double a = ang0 + (ang1 - ang0) * t;
    return Vec{std::cos(a), std::sin(a)} * static_cast<double>(orient);
  }
  return perp2(tangent(t)) * static_cast<double>(orient);
}

double InterfacePatch::length() const {
  switch (kind) {
    case PatchKind::Segment:
      return dist(p0, p1);
    case PatchKind::Arc:
      return radius * std::abs(ang1 - ang0);
    case PatchKind::Planar:
      return norm(cross(eu, ev));  // H^2 measure of the patch
    case PatchKind::Mapped:
      return integrate_adaptive([this](double t) { return norm(velocity(t)); }, 0.0, 1.0, 1e-9);
  }
  return 0;
}

double InterfacePatch::distance_to(const Vec& p) const {
  switch (kind) {
    case PatchKind::Segment:
      return dist_point_segment(p, p0, p1);
    case PatchKind::Arc: {
      const Vec d = p - center;
      const double rho = norm(d);
      if (rho < 1e-14) return radius;
      double theta = std::atan2(d.y, d.x);
      const double lo = std::min(ang0, ang1), hi = std::max(ang0, ang1);
      while (theta < lo) theta += 2 * M_PI;
      while (theta >= lo + 2 * M_PI) theta -= 2 * M_PI;
      if (theta <= hi) return std::abs(rho - radius);
      return std::min(dist(p, point(0.0)), dist(p, point(1.0)));
    }
    case PatchKind::Planar: {
      const Vec d = p - origin;
      const double u = std::clamp(dot(d, eu) / norm2(eu), 0.0, 1.0);
      const double v = std::clamp(dot(d, ev) / norm2(ev), 0.0, 1.0);
      return dist(p, origin + eu * u + ev * v);
    }
    case PatchKind::Mapped: {
      double best = 1e300;
      constexpr int kSamples = 256;
      double tb = 0;
      for (int i = 0; i <= kSamples; ++i) {
        const double t = static_cast<double>(i) / kSamples;
        const double d = dist(p, point(t));
        if (d < best) {
          best = d;
          tb = t;
        }
      }
      double a = std::max(0.0, tb - 1.0 / kSamples), b = std::min(1.0, tb + 1.0 / kSamples);
      for (int it = 0; it < 40; ++it) {
        const double m1 = a + 0.382 * (b - a), m2 = a + 0.618 * (b - a);
        if (dist(p, point(m1)) < dist(p, point(m2)))
          b = m2;
        else
          a = m1;
      }
      return std::min(best, dist(p, point(0.5 * (a + b))));
    }
  }
  return 0;
}

Vec InterfacePatch::surf_point(double u, double v) const { return origin + eu * u + ev * v; }

double InterfacePatch::jump_mass(const LabelSet& labels) const {
  return length() * labels.distance(phase_plus, phase_minus);
}

// ---------------------------------------------------------------------------
// domains

bool DomainDesc::contains(const Vec& p, double tol) const {
  if (kind == Kind::Disc) return dist(p, disc.center) <= disc.radius + tol;
  const auto& vs = polygon.verts;
  for (size_t i = 0; i < vs.size(); ++i) {
    const Vec a = vs[i], b = vs[(i + 1) % vs.size()];
    if (cross2(b - a, p - a) < -tol) return false;
  }
  return true;
}

double DomainDesc::inradius() const {
  if (kind == Kind::Disc) return disc.radius;
  const auto& vs = polygon.verts;
  Vec c{};
  for (const Vec& v : vs) c += v;
  c = c / static_cast<double>(vs.size());
  double r = 1e300;
  for (size_t i = 0; i < vs.size(); ++i)
    r = std::min(r, dist_point_segment(c, vs[i], vs[(i + 1) % vs.size()]));
  return r;
}

// ---------------------------------------------------------------------------
// AnalyticPartition

double AnalyticPartition::total_jump_mass() const {
  double m = 0;
  for (const auto& p : patches) m += p.jump_mass(labels);
  return m;
}

void AnalyticPartition::validate(int samples_per_patch) const {
  labels.validate();
  const double h = 1e-6;
  for (const auto& patch : patches) {
    if (patch.phase_plus == patch.phase_minus)
      throw std::runtime_error("InterfacePatch: equal side labels");
    for (int k = 0; k <= samples_per_patch; ++k) {
      const double t = (k + 0.5) / (samples_per_patch + 1);
      const Vec y = patch.kind == PatchKind::Planar ? patch.surf_point(t, 0.5) : patch.point(t);
      const Vec nu = patch.kind == PatchKind::Planar ? patch.normal(0) : patch.normal(t);
      if (std::abs(norm(nu) - 1.0) > 1e-12)
        throw std::runtime_error("InterfacePatch: normal not unit at quadrature node");
      if (classifier(y + nu * h) != patch.phase_plus ||
          classifier(y - nu * h) != patch.phase_minus)
        throw std::runtime_error("InterfacePatch: normal inconsistent with classifier");
    }
  }
  // pairwise disjointness except at junction points
  for (size_t i = 0; i < patches.size(); ++i)
    for (size_t j = i + 1; j < patches.size(); ++j) {
      constexpr int kProbe = 64;
      for (int k = 1; k < kProbe; ++k) {
        const double t = static_cast<double>(k) / kProbe;
        const Vec p = patches[i].kind == PatchKind::Planar ? patches[i].surf_point(t, 0.5)
                                                           : patches[i].point(t);
        const double d = patches[j].distance_to(p);
        const double dend =
            std::min(dist(p, patches[j].point(0.0)), dist(p, patches[j].point(1.0)));
        if (d < 1e-9 && dend > 1e-6)
          throw std::runtime_error("InterfacePatch: interior patch overlap");
      }
    }
}

// ---------------------------------------------------------------------------
// PolyhedralPartition

double PolyhedralPartition::interface_measure() const {
  double m = 0;
  for (const auto& jf : jump_facets)
    for (const auto& s : jf.facet.simplexes) m += s.measure();
  return m;
}

std::vector<double> PolyhedralPartition::cell_volumes_by_phase() const {
  std::vector<double> v(labels.count(), 0.0);
  for (const auto& c : cells) v[c.phase] += c.poly.volume();
  return v;
}

PartitionLocator::PartitionLocator(const PolyhedralPartition& part) : part_(&part) {
  box_ = part.box;
  if (part.virtual_background || part.cells.empty()) return;
  const int n =
      std::max<int>(1, 2 * static_cast<int>(std::pow(static_cast<double>(part.cells.size()),
                                                     1.0 / part.dim)));
  nx_ = ny_ = std::min(n, 2048);
  nz_ = part.dim == 3 ? std::min(n, 256) : 1;
  hx_ = (box_.hi.x - box_.lo.x) / nx_;
  hy_ = (box_.hi.y - box_.lo.y) / ny_;
  hz_ = part.dim == 3 ? (box_.hi.z - box_.lo.z) / nz_ : 1.0;
  buckets_.assign(static_cast<size_t>(nx_) * ny_ * nz_, {});
  for (size_t ci = 0; ci < part.cells.size(); ++ci) {
    const BBox b = part.cells[ci].poly.bbox();
    const int x0 = std::clamp(static_cast<int>((b.lo.x - box_.lo.x) / hx_), 0, nx_ - 1);
    const int x1 = std::clamp(static_cast<int>((b.hi.x - box_.lo.x) / hx_), 0, nx_ - 1);
    const int y0 = std::clamp(static_cast<int>((b.lo.y - box_.lo.y) / hy_), 0, ny_ - 1);
    const int y1 = std::clamp(static_cast<int>((b.hi.y - box_.lo.y) / hy_), 0, ny_ - 1);
    const int z0 =
        part.dim == 3 ? std::clamp(static_cast<int>((b.lo.z - box_.lo.z) / hz_), 0, nz_ - 1) : 0;
    const int z1 =
        part.dim == 3 ? std::clamp(static_cast<int>((b.hi.z - box_.lo.z) / hz_), 0, nz_ - 1) : 0;
    for (int x = x0; x <= x1; ++x)
      for (int y = y0; y <= y1; ++y)
        for (int z = z0; z <= z1; ++z)
          buckets_[(static_cast<size_t>(z) * ny_ + y) * nx_ + x].push_back(static_cast<int>(ci));
  }
}

int PartitionLocator::phase_at(const Vec& p) const {
  if (part_->virtual_background) return part_->background(p);
  const int x = std::clamp(static_cast<int>((p.x - box_.lo.x) / hx_), 0, nx_ - 1);
  const int y = std::clamp(static_cast<int>((p.y - box_.lo.y) / hy_), 0, ny_ - 1);
  const int z =
      part_->dim == 3 ? std::clamp(static_cast<int>((p.z - box_.lo.z) / hz_), 0, nz_ - 1) : 0;
  const auto& cand = buckets_[(static_cast<size_t>(z) * ny_ + y) * nx_ + x];
  int best = -1;
  double best_violation = 1e300;
  for (int ci : cand) {
    const auto& poly = part_->cells[ci].poly;
    double worst = -1e300;
    for (const auto& h : poly.planes) worst = std::max(worst, h.signed_dist(p));
    if (worst <= kGeomTol) return part_->cells[ci].phase;
    if (worst < best_violation) {
      best_violation = worst;
      best = ci;
    }
  }
  if (best >= 0 && best_violation < 1e-6) return part_->cells[best].phase;
  for (const auto& c : part_->cells)
    if (c.poly.contains(p, 1e-6)) return c.phase;
  return -1;
}

// ---------------------------------------------------------------------------
// measures

double WeightMat::frob() const {
  double s = 0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

WeightMat& WeightMat::operator+=(const WeightMat& o) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

WeightMat& WeightMat::operator-=(const WeightMat& o) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
  return *this;
}

WeightMat outer_weight(const LabelVec& dz, const Vec& nu, int dim) {
  WeightMat w;
  w.rows = static_cast<int>(dz.size());
  w.cols = dim;
  w.a.resize(static_cast<size_t>(w.rows) * w.cols);
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < dim; ++j) w.at(i, j) = dz[i] * nu[j];
  return w;
}

double PolyhedralMeasure::total_variation() const {
  double tv = 0;
  for (const auto& e : entries) {
    double area = 0;
    for (const auto& s : e.facet.simplexes) area += s.measure();
    tv += e.weight.frob() * area;
  }
  return tv;
}

std::map<int, double> phase_volumes(const std::function<int(const Vec&)>& classifier,
                                    const ConvexPolytope& cell, int samples, std::uint64_t seed) {
  if (samples < 100) throw std::runtime_error("phase_volumes: samples must be >= 100");
  SplitMix64 rng(seed);
  const BBox b = cell.bbox();
  std::map<int, std::int64_t> counts;
  std::int64_t accepted = 0;
  const std::int64_t max_attempts = static_cast<std::int64_t>(samples) * 1000;
  for (std::int64_t att = 0; accepted < samples && att < max_attempts; ++att) {
    Vec p{rng.uniform(b.lo.x, b.hi.x), rng.uniform(b.lo.y, b.hi.y),
          cell.dim == 3 ? rng.uniform(b.lo.z, b.hi.z) : 0.0};
    if (!cell.contains(p)) continue;
    ++accepted;
    counts[classifier(p)]++;
  }
  if (accepted == 0) throw std::runtime_error("phase_volumes: rejection sampling found no points");
  std::map<int, double> out;
  for (const auto& [phase, c] : counts)
    out[phase] = static_cast<double>(c) / static_cast<double>(accepted);
  return out;
}

PolyhedralMeasure jump_measure(const PolyhedralPartition& p, const LabelSet& labels) {
  PolyhedralMeasure m;
  m.dim = p.dim;
  for (const auto& jf : p.jump_facets) {
    LabelVec dz = labels.labels[jf.phase_plus];
    const LabelVec& zm = labels.labels[jf.phase_minus];
    for (size_t i = 0; i < dz.size(); ++i) dz[i] -= zm[i];
    m.entries.push_back({jf.facet, outer_weight(dz, jf.facet.normal, p.dim)});
  }
  return m;
}

// ---------------------------------------------------------------------------
// overlay machinery for measure_difference_tv

namespace {

struct PlaneKey {
  Vec normal;  // canonical sign
  double offset;
};

PlaneKey plane_key_of(const Facet& f) {
  Vec n = f.normal;
  double off = dot(n, f.simplexes[0].p[0]);
  const double lead = std::abs(n.x) > 1e-10 ? n.x : (std::abs(n.y) > 1e-10 ? n.y : n.z);
  if (lead < 0) {
    n = -n;
    off = -off;
  }
  return {n, off};
}

bool plane_key_close(const PlaneKey& a, const PlaneKey& b) {
  return dist(a.normal, b.normal) < 1e-9 && std::abs(a.offset - b.offset) < 1e-9;
}

double segment_overlap(const Simplex& sa, const Simplex& sb, const Vec& dir) {
  double a0 = dot(sa.p[0], dir), a1 = dot(sa.p[1], dir);
  double b0 = dot(sb.p[0], dir), b1 = dot(sb.p[1], dir);
  if (a0 > a1) std::swap(a0, a1);
  if (b0 > b1) std::swap(b0, b1);
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

double triangle_overlap(const Simplex& sa, const Simplex& sb, const Vec& normal) {
  Vec u = sa.p[1] - sa.p[0];
  if (norm(u) < 1e-14) return 0;
  u = normalized(u - normal * dot(u, normal));
  const Vec w = cross(normal, u);
  const Vec o = sa.p[0];
  auto to2d = [&](const Vec& p) { return Vec{dot(p - o, u), dot(p - o, w)}; };
  std::vector<Vec> poly = {to2d(sb.p[0]), to2d(sb.p[1]), to2d(sb.p[2])};
  if (cross2(poly[1] - poly[0], poly[2] - poly[0]) < 0) std::swap(poly[1], poly[2]);
  std::array<Vec, 3> clipper = {to2d(sa.p[0]), to2d(sa.p[1]), to2d(sa.p[2])};
  if (cross2(clipper[1] - clipper[0], clipper[2] - clipper[0]) < 0)
    std::swap(clipper[1], clipper[2]);
  for (int e = 0; e < 3 && !poly.empty(); ++e) {
    const Vec a = clipper[e], b = clipper[(e + 1) % 3];
    std::vector<Vec> out;
    const size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
      const Vec p = poly[i], q = poly[(i + 1) % m];
      const double dp = cross2(b - a, p - a), dq = cross2(b - a, q - a);
      if (dp >= -1e-14) out.push_back(p);
      if ((dp > 1e-14 && dq < -1e-14) || (dp < -1e-14 && dq > 1e-14))
        out.push_back(p + (q - p) * (dp / (dp - dq)));
    }
    poly = std::move(out);
  }
  if (poly.size() < 3) return 0;
  double area = 0;
  for (size_t i = 0; i < poly.size(); ++i) area += cross2(poly[i], poly[(i + 1) % poly.size()]);
  area = 0.5 * std::abs(area);
  if (!(area >= 0) || area > sa.measure() + sb.measure() + 1e-9)
    throw OverlayFailure("triangle_overlap: degenerate overlay piece");
  return area;
}

double facet_overlap(const Facet& fa, const Facet& fb, const PlaneKey& key, int dim) {
  double total = 0;
  if (dim == 2) {
    const Vec dir = perp2(key.normal);
    for (const auto& sa : fa.simplexes)
      for (const auto& sb : fb.simplexes) total += segment_overlap(sa, sb, dir);
  } else {
    for (const auto& sa : fa.simplexes)
      for (const auto& sb : fb.simplexes) total += triangle_overlap(sa, sb, key.normal);
  }
  return total;
}

double facet_area(const Facet& f) {
  double a = 0;
  for (const auto& s : f.simplexes) a += s.measure();
  return a;
}

struct GroupedEntry {
  const MeasureEntry* entry;
  bool from_a;
};

}  // namespace

double measure_difference_tv(const PolyhedralMeasure& a, const PolyhedralMeasure& b) {
  const int dim = a.entries.empty() ? b.dim : a.dim;
  std::vector<std::pair<PlaneKey, std::vector<GroupedEntry>>> groups;
  // quantized hash so grouping stays near-linear; exact key comparison after
  std::unordered_map<std::int64_t, std::vector<int>> hash;
  auto bucket_of = [](const PlaneKey& k) {
    const double q = 1e-6;
    auto qz = [&](double v) { return static_cast<std::int64_t>(std::floor(v / q)); };
    std::int64_t h = qz(k.normal.x);
    h = h * 1000003 + qz(k.normal.y);
    h = h * 1000003 + qz(k.normal.z);
    h = h * 1000003 + qz(k.offset);
    return h;
  };
  auto add_entry = [&](const MeasureEntry& e, bool from_a) {
    const PlaneKey key = plane_key_of(e.facet);
    // probe neighbor buckets so values straddling a quantization boundary meet
    const double q = 1e-6;
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz)
          for (int dw = -1; dw <= 1; ++dw) {
            PlaneKey probe = key;
            probe.normal.x += dx * q;
            probe.normal.y += dy * q;
            probe.normal.z += dz * q;
            probe.offset += dw * q;
            auto it = hash.find(bucket_of(probe));
            if (it == hash.end()) continue;
            for (int gi : it->second)
              if (plane_key_close(groups[gi].first, key)) {
                groups[gi].second.push_back({&e, from_a});
                return;
              }
          }
    groups.push_back({key, {{&e, from_a}}});
    hash[bucket_of(key)].push_back(static_cast<int>(groups.size()) - 1);
  };
  for (const auto& e : a.entries) add_entry(e, true);
  for (const auto& e : b.entries) add_entry(e, false);

  double tv = 0;
  for (const auto& [key, list] : groups) {
    std::vector<const MeasureEntry*> as, bs;
    for (const auto& ge : list) (ge.from_a ? as : bs).push_back(ge.entry);
    std::vector<double> b_claimed(bs.size(), 0.0);
    std::vector<BBox> b_boxes;
    b_boxes.reserve(bs.size());
    for (const auto* eb : bs) b_boxes.push_back(eb->facet.bbox());
    for (const auto* ea : as) {
      const double area_a = facet_area(ea->facet);
      double claimed = 0;
      const BBox ba = ea->facet.bbox();
      for (size_t j = 0; j < bs.size(); ++j) {
        bool sep = false;
        for (int c = 0; c < dim; ++c)
          if (ba.hi[c] < b_boxes[j].lo[c] - 1e-9 || b_boxes[j].hi[c] < ba.lo[c] - 1e-9) sep = true;
        if (sep) continue;
        const double ov = facet_overlap(ea->facet, bs[j]->facet, key, dim);
        if (ov <= 0) continue;
        WeightMat d = ea->weight;
        d -= bs[j]->weight;
        tv += d.frob() * ov;
        claimed += ov;
        b_claimed[j] += ov;
      }
      tv += ea->weight.frob() * std::max(0.0, area_a - claimed);
    }
    for (size_t j = 0; j < bs.size(); ++j)
      tv += bs[j]->weight.frob() * std::max(0.0, facet_area(bs[j]->facet) - b_claimed[j]);
  }
  return tv;
}

namespace {

PolyhedralMeasure clip_measure_to_support(const PolyhedralMeasure& m, const PolyhedronSet& sup) {
  PolyhedralMeasure out;
  out.dim = m.dim;
  for (const auto& e : m.entries) {
    const PlaneKey key = plane_key_of(e.facet);
    for (const auto& piece : sup.pieces) {
      if (piece.facets.empty()) continue;
      const PlaneKey pk = plane_key_of(piece.facets[0]);
      if (!plane_key_close(key, pk)) continue;
      if (m.dim == 2) {
        const Vec dir = perp2(key.normal);
        for (const auto& sa : e.facet.simplexes)
          for (const auto& pf : piece.facets)
            for (const auto& sb : pf.simplexes) {
              double a0 = dot(sa.p[0], dir), a1 = dot(sa.p[1], dir);
              Vec pa = sa.p[0], pb = sa.p[1];
              if (a0 > a1) {
                std::swap(a0, a1);
                std::swap(pa, pb);
              }
              double b0 = dot(sb.p[0], dir), b1 = dot(sb.p[1], dir);
              if (b0 > b1) std::swap(b0, b1);
              const double lo = std::max(a0, b0), hi = std::min(a1, b1);
              if (hi - lo <= 1e-12 || a1 - a0 <= 1e-300) continue;
              const Vec va = pa + (pb - pa) * ((lo - a0) / (a1 - a0));
              const Vec vb = pa + (pb - pa) * ((hi - a0) / (a1 - a0));
              out.entries.push_back({Facet::segment(va, vb, e.facet.normal), e.weight});
            }
      } else {
        for (const auto& sa : e.facet.simplexes) {
          double ov = 0;
          for (const auto& pf : piece.facets)
            for (const auto& sb : pf.simplexes) ov += triangle_overlap(sa, sb, key.normal);
          if (ov > 1e-12) {
            Facet f;
            f.dim = 3;
            f.normal = e.facet.normal;
            f.simplexes.push_back(sa);
            out.entries.push_back({f, e.weight});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

double measure_difference_tv_on(const PolyhedralMeasure& a, const PolyhedralMeasure& b,
                                const PolyhedronSet& support) {
  return measure_difference_tv(clip_measure_to_support(a, support),
                               clip_measure_to_support(b, support));
}

double symmetric_difference_volume(const std::function<int(const Vec&)>& u,
                                   const PolyhedralPartition& w, int phase, int samples,
                                   std::uint64_t seed) {
  SplitMix64 rng(seed);
  const BBox& b = w.box;
  const PartitionLocator locator(w);
  std::int64_t mismatch = 0;
  for (int k = 0; k < samples; ++k) {
    const Vec p{rng.uniform(b.lo.x, b.hi.x), rng.uniform(b.lo.y, b.hi.y),
                w.dim == 3 ? rng.uniform(b.lo.z, b.hi.z) : 0.0};
    const bool in_u = u(p) == phase;
    const bool in_w = locator.phase_at(p) == phase;
    if (in_u != in_w) ++mismatch;
  }
  double vol = (b.hi.x - b.lo.x) * (b.hi.y - b.lo.y);
  if (w.dim == 3) vol *= (b.hi.z - b.lo.z);
  return vol * static_cast<double>(mismatch) / samples;
}

}  // namespace polypart
