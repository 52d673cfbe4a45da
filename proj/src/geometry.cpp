#include "polypart/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace polypart {

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

Mat3 rotation_between(const Vec& from, const Vec& to, int dim) {
  const Vec f = normalized(from), t = normalized(to);
  if (dim == 2) {
    const double c = dot(f, t), s = cross2(f, t);
    Mat3 r;
    r[0][0] = c; r[0][1] = -s; r[1][0] = s; r[1][1] = c;
    return r;
  }
  Vec axis = cross(f, t);
  const double s = norm(axis), c = dot(f, t);
  if (s < 1e-14) {
    if (c > 0) return Mat3::identity();
    // opposite vectors: rotate pi about any axis orthogonal to f
    Vec ortho = std::abs(f.x) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    axis = normalized(ortho - f * dot(ortho, f));
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i][j] = 2.0 * axis[i] * axis[j] - (i == j ? 1.0 : 0.0);
    return r;
  }
  axis = axis / s;
  // Rodrigues
  Mat3 k{}, r;
  k[0][0] = 0;        k[0][1] = -axis.z; k[0][2] = axis.y;
  k[1][0] = axis.z;   k[1][1] = 0;       k[1][2] = -axis.x;
  k[2][0] = -axis.y;  k[2][1] = axis.x;  k[2][2] = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double kk = 0;
      for (int l = 0; l < 3; ++l) kk += k[i][l] * k[l][j];
      r[i][j] = (i == j ? 1.0 : 0.0) + s * k[i][j] + (1 - c) * kk;
    }
  return r;
}

Isometry::Isometry(const Mat3& q, const Vec& b, int n) : rotation(q), translation(b), dim(n) {
  Mat3 qtq = q.transposed().mul(q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(qtq[i][j] - want) > kOrthoTol)
        throw GeometryError("Isometry: rotation is not orthogonal within 1e-12");
    }
  if (q.det() < 0) throw GeometryError("Isometry: rotation has negative determinant");
}

Isometry Isometry::inverse() const {
  Isometry inv;
  inv.rotation = rotation.transposed();
  inv.translation = -inv.rotation.apply(translation);
  inv.dim = dim;
  return inv;
}

Isometry Isometry::compose(const Isometry& other) const {
  Isometry r;
  r.rotation = rotation.mul(other.rotation);
  r.translation = rotation.apply(other.translation) + translation;
  r.dim = dim;
  return r;
}

Isometry Isometry::frame_to_standard(const Vec& center, const Vec& axis, int n) {
  const Vec en = n == 2 ? Vec{0, 1, 0} : Vec{0, 0, 1};
  Mat3 q = rotation_between(axis, en, n);
  return Isometry(q, -q.apply(center), n);
}

// ---------------------------------------------------------------------------
// ConvexPolytope

namespace {

// order polygon vertex indices CCW about the face normal; drops near-duplicates
std::vector<int> order_loop(const std::vector<Vec>& verts, std::vector<int> idx, const Vec& normal) {
  if (idx.size() < 3) return idx;
  Vec c{};
  for (int i : idx) c += verts[i];
  c = c / static_cast<double>(idx.size());
  Vec u = verts[idx[0]] - c;
  u = u - normal * dot(u, normal);
  if (norm(u) < 1e-14) u = std::abs(normal.x) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
  u = normalized(u - normal * dot(u, normal));
  const Vec w = cross(normal, u);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Vec pa = verts[a] - c, pb = verts[b] - c;
    return std::atan2(dot(pa, w), dot(pa, u)) < std::atan2(dot(pb, w), dot(pb, u));
  });
  std::vector<int> out;
  for (int i : idx) {
    if (!out.empty() && dist(verts[out.back()], verts[i]) < kGeomTol) continue;
    out.push_back(i);
  }
  while (out.size() > 1 && dist(verts[out.front()], verts[out.back()]) < kGeomTol) out.pop_back();
  return out;
}

}  // namespace

ConvexPolytope ConvexPolytope::axis_box(const Vec& lo, const Vec& hi, int n) {
  ConvexPolytope p;
  p.dim = n;
  if (n == 2) {
    p.verts = {{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
    p.planes = {{{0, -1, 0}, -lo.y}, {{1, 0, 0}, hi.x}, {{0, 1, 0}, hi.y}, {{-1, 0, 0}, -lo.x}};
    p.faces = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return p;
  }
  for (int i = 0; i < 8; ++i)
    p.verts.push_back({(i & 1) ? hi.x : lo.x, (i & 2) ? hi.y : lo.y, (i & 4) ? hi.z : lo.z});
  struct F { Vec nrm; double off; std::vector<int> ids; };
  const std::vector<F> fs = {
      {{-1, 0, 0}, -lo.x, {0, 2, 6, 4}}, {{1, 0, 0}, hi.x, {1, 3, 7, 5}},
      {{0, -1, 0}, -lo.y, {0, 1, 5, 4}}, {{0, 1, 0}, hi.y, {2, 3, 7, 6}},
      {{0, 0, -1}, -lo.z, {0, 1, 3, 2}}, {{0, 0, 1}, hi.z, {4, 5, 7, 6}}};
  for (const auto& f : fs) {
    p.planes.push_back({f.nrm, f.off});
    p.faces.push_back(order_loop(p.verts, f.ids, f.nrm));
  }
  return p;
}

std::optional<ConvexPolytope> ConvexPolytope::clipped(const HalfSpace& h, double tol) const {
  std::vector<double> d(verts.size());
  double dmin = 1e300, dmax = -1e300;
  for (size_t i = 0; i < verts.size(); ++i) {
    d[i] = h.signed_dist(verts[i]);
    dmin = std::min(dmin, d[i]);
    dmax = std::max(dmax, d[i]);
  }
  if (dmax <= tol) return *this;          // no cut: plane redundant
  if (dmin >= -tol) return std::nullopt;  // nothing strictly inside

  if (dim == 2) {
    // walk the CCW vertex cycle; planes follow their surviving edges
    const size_t m = verts.size();
    auto edge_plane = [&](int a, int b) -> HalfSpace {
      for (size_t f = 0; f < faces.size(); ++f)
        if ((faces[f][0] == a && faces[f][1] == b) || (faces[f][0] == b && faces[f][1] == a))
          return planes[f];
      throw GeometryError("ConvexPolytope: inconsistent 2D face table");
    };
    std::vector<Vec> vv;
    std::vector<HalfSpace> pp;  // plane of the edge leaving vv[k]
    for (size_t a = 0; a < m; ++a) {
      const size_t b = (a + 1) % m;
      const int ia = static_cast<int>(a), ib = static_cast<int>(b);
      if (d[a] <= tol) {
        vv.push_back(verts[a]);
        // a vertex sitting on the cut plane with its successor clipped away
        // leaves along the cut plane itself
        pp.push_back((std::abs(d[a]) <= tol && d[b] > tol) ? h : edge_plane(ia, ib));
      }
      if ((d[a] < -tol && d[b] > tol) || (d[a] > tol && d[b] < -tol)) {
        const double t = d[a] / (d[a] - d[b]);
        vv.push_back(verts[a] + (verts[b] - verts[a]) * t);
        // exit point travels along the cut plane, entry point along the edge
        pp.push_back(d[a] < d[b] ? h : edge_plane(ia, ib));
      }
    }
    // drop zero-length edges
    ConvexPolytope fin;
    fin.dim = 2;
    for (size_t k = 0; k < vv.size(); ++k) {
      const Vec& va = vv[k];
      const Vec& vb = vv[(k + 1) % vv.size()];
      if (dist(va, vb) < kGeomTol) continue;
      fin.verts.push_back(va);
      fin.planes.push_back(pp[k]);
    }
    if (fin.verts.size() < 3) return std::nullopt;
    for (size_t k = 0; k < fin.verts.size(); ++k)
      fin.faces.push_back({static_cast<int>(k), static_cast<int>((k + 1) % fin.verts.size())});
    return fin;
  }

  ConvexPolytope out;
  out.dim = 3;
  std::vector<int> remap(verts.size(), -1);
  auto keep_vert = [&](int i) {
    if (remap[i] < 0) {
      remap[i] = static_cast<int>(out.verts.size());
      out.verts.push_back(verts[i]);
    }
    return remap[i];
  };
  std::map<std::pair<int, int>, int> edge_cut;  // old edge -> new vertex index
  auto cut_vert = [&](int i, int j) {
    auto key = std::minmax(i, j);
    auto it = edge_cut.find(key);
    if (it != edge_cut.end()) return it->second;
    const double t = d[i] / (d[i] - d[j]);
    const int id = static_cast<int>(out.verts.size());
    out.verts.push_back(verts[i] + (verts[j] - verts[i]) * t);
    edge_cut.emplace(key, id);
    return id;
  };
  std::vector<int> cut_face;
  auto note_cut = [&](int id) {
    if (std::find(cut_face.begin(), cut_face.end(), id) == cut_face.end()) cut_face.push_back(id);
  };

  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& loop = faces[f];
    const size_t m = loop.size();
    std::vector<int> nl;
    for (size_t a = 0; a < m; ++a) {
      const int i = loop[a], j = loop[(a + 1) % m];
      if (d[i] <= tol) {
        const int id = keep_vert(i);
        nl.push_back(id);
        if (std::abs(d[i]) <= tol) note_cut(id);
      }
      if ((d[i] < -tol && d[j] > tol) || (d[i] > tol && d[j] < -tol)) {
        const int id = cut_vert(i, j);
        nl.push_back(id);
        note_cut(id);
      }
    }
    if (static_cast<int>(nl.size()) >= 3) {
      out.planes.push_back(planes[f]);
      out.faces.push_back(nl);
    }
  }

  if (static_cast<int>(cut_face.size()) >= 3) {
    auto loop = order_loop(out.verts, cut_face, h.normal);
    if (static_cast<int>(loop.size()) >= 3) {
      out.planes.push_back(h);
      out.faces.push_back(loop);
    }
  }
  if (out.verts.size() < 4 || out.faces.size() < 4) return std::nullopt;
  return out;
}

double ConvexPolytope::volume() const {
  if (dim == 2) {
    double a = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
      const Vec& p = verts[i];
      const Vec& q = verts[(i + 1) % verts.size()];
      a += cross2(p, q);
    }
    return 0.5 * std::abs(a);
  }
  double v = 0;
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& loop = faces[f];
    for (size_t k = 1; k + 1 < loop.size(); ++k) {
      const Vec &a = verts[loop[0]], &b = verts[loop[k]], &c = verts[loop[k + 1]];
      v += dot(cross(b - a, c - a), a);
    }
  }
  return std::abs(v) / 6.0;
}

Vec ConvexPolytope::centroid() const {
  Vec c{};
  for (const Vec& v : verts) c += v;
  return c / static_cast<double>(verts.size());
}

BBox ConvexPolytope::bbox() const {
  BBox b = BBox::empty();
  for (const Vec& v : verts) b.expand(v);
  return b;
}

bool ConvexPolytope::contains(const Vec& p, double tol) const {
  for (const auto& h : planes)
    if (h.signed_dist(p) > tol) return false;
  return true;
}

double ConvexPolytope::inradius_from(const Vec& center) const {
  double r = 1e300;
  for (const auto& h : planes) r = std::min(r, -h.signed_dist(center));
  return r;
}

double ConvexPolytope::circumradius_from(const Vec& center) const {
  double r = 0;
  for (const Vec& v : verts) r = std::max(r, dist(v, center));
  return r;
}

ConvexPolytope halfspace_intersection(int dim, const std::vector<HalfSpace>& halfspaces) {
  if (static_cast<int>(halfspaces.size()) < dim + 1)
    throw GeometryError("halfspace_intersection: need at least n+1 half-spaces");
  double scale = 1.0;
  for (const auto& h : halfspaces) scale = std::max(scale, std::abs(h.offset));
  const double big = 100.0 * scale + 1e3;
  ConvexPolytope poly = ConvexPolytope::axis_box({-big, -big, -big}, {big, big, big}, dim);
  const size_t n_seed = poly.planes.size();
  for (const auto& raw : halfspaces) {
    const double len = norm(raw.normal);
    if (len < kOrthoTol) throw GeometryError("halfspace_intersection: zero normal");
    HalfSpace h{raw.normal / len, raw.offset / len};
    auto next = poly.clipped(h);
    if (!next) throw EmptyCell("halfspace_intersection: empty intersection");
    poly = std::move(*next);
  }
  // any surviving seed plane means the true intersection is unbounded
  for (const auto& h : poly.planes) {
    if (std::abs(std::abs(h.offset) - big) < 1e-6 &&
        (std::abs(std::abs(h.normal.x) - 1) < 1e-12 || std::abs(std::abs(h.normal.y) - 1) < 1e-12 ||
         std::abs(std::abs(h.normal.z) - 1) < 1e-12)) {
      bool user_plane = false;
      for (const auto& u : halfspaces) {
        const double len = norm(u.normal);
        if (dist(u.normal / len, h.normal) < 1e-9 && std::abs(u.offset / len - h.offset) < 1e-9)
          user_plane = true;
      }
      if (!user_plane) throw UnboundedCell("halfspace_intersection: unbounded intersection");
    }
  }
  (void)n_seed;
  return poly;
}

std::vector<Vec> enumerate_vertices_bruteforce(int dim, const std::vector<HalfSpace>& raw) {
  std::vector<HalfSpace> hs;
  for (const auto& h : raw) hs.push_back({h.normal / norm(h.normal), h.offset / norm(h.normal)});
  std::vector<Vec> out;
  auto feasible = [&](const Vec& p) {
    for (const auto& h : hs)
      if (h.signed_dist(p) > kGeomTol) return false;
    return true;
  };
  auto push = [&](const Vec& p) {
    for (const Vec& q : out)
      if (dist(p, q) < 10 * kGeomTol) return;
    out.push_back(p);
  };
  const int m = static_cast<int>(hs.size());
  if (dim == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const Vec &a = hs[i].normal, &b = hs[j].normal;
        const double det = a.x * b.y - a.y * b.x;
        if (std::abs(det) < 1e-12) continue;
        const Vec p{(hs[i].offset * b.y - hs[j].offset * a.y) / det,
                    (a.x * hs[j].offset - b.x * hs[i].offset) / det};
        if (feasible(p)) push(p);
      }
    return out;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Mat3 a;
        a[0] = {hs[i].normal.x, hs[i].normal.y, hs[i].normal.z};
        a[1] = {hs[j].normal.x, hs[j].normal.y, hs[j].normal.z};
        a[2] = {hs[k].normal.x, hs[k].normal.y, hs[k].normal.z};
        const double det = a.det();
        if (std::abs(det) < 1e-12) continue;
        // Cramer
        auto col_solve = [&](int c) {
          Mat3 t = a;
          t[0][c] = hs[i].offset;
          t[1][c] = hs[j].offset;
          t[2][c] = hs[k].offset;
          return t.det() / det;
        };
        const Vec p{col_solve(0), col_solve(1), col_solve(2)};
        if (feasible(p)) push(p);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Facets

double Simplex::measure() const {
  if (npts == 2) return dist(p[0], p[1]);
  return 0.5 * norm(cross(p[1] - p[0], p[2] - p[0]));
}

Vec Simplex::centroid() const {
  Vec c{};
  for (int i = 0; i < npts; ++i) c += p[i];
  return c / static_cast<double>(npts);
}

Facet Facet::segment(const Vec& a, const Vec& b, const Vec& nrm) {
  Facet f;
  f.dim = 2;
  f.normal = nrm;
  Simplex s;
  s.p = {a, b, Vec{}};
  s.npts = 2;
  f.simplexes.push_back(s);
  return f;
}

Facet Facet::from_polygon(const std::vector<Vec>& loop, const Vec& nrm) {
  Facet f;
  f.dim = 3;
  f.normal = nrm;
  for (size_t k = 1; k + 1 < loop.size(); ++k) {
    Simplex s;
    s.p = {loop[0], loop[k], loop[k + 1]};
    s.npts = 3;
    f.simplexes.push_back(s);
  }
  return f;
}

void Facet::validate() const {
  if (simplexes.empty()) throw DegenerateFacet("Facet: no simplexes");
  if (std::abs(norm(normal) - 1.0) > kOrthoTol) throw DegenerateFacet("Facet: normal not unit");
  const double off = dot(normal, simplexes[0].p[0]);
  for (const auto& s : simplexes) {
    if (s.measure() <= kGeomTol * kGeomTol)
      throw DegenerateFacet("Facet: zero-measure simplex");
    for (int i = 0; i < s.npts; ++i)
      if (std::abs(dot(normal, s.p[i]) - off) > kGeomTol)
        throw DegenerateFacet("Facet: simplexes not coplanar within 1e-9");
  }
}

BBox Facet::bbox() const {
  BBox b = BBox::empty();
  for (const auto& s : simplexes)
    for (int i = 0; i < s.npts; ++i) b.expand(s.p[i]);
  return b;
}

double facet_measure(const Facet& f) {
  f.validate();
  double m = 0;
  for (const auto& s : f.simplexes) m += s.measure();
  return m;
}

double FlatPolyhedron::measure() const {
  double m = 0;
  for (const auto& f : facets)
    for (const auto& s : f.simplexes) m += s.measure();
  return m;
}

BBox FlatPolyhedron::bbox() const {
  BBox b = BBox::empty();
  for (const auto& f : facets) {
    const BBox fb = f.bbox();
    b.expand(fb.lo);
    b.expand(fb.hi);
  }
  return b;
}

void PolyhedronSet::validate() const {
  for (const auto& pc : pieces) {
    for (const auto& f : pc.facets) {
      f.validate();
      for (const auto& s : f.simplexes)
        for (int i = 0; i < s.npts; ++i)
          if (std::abs(pc.plane.signed_dist(s.p[i])) > kOrthoTol * 100)
            throw GeometryError("PolyhedronSet: piece not inside its supporting hyperplane");
    }
  }
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t l = i + 1; l < pieces.size(); ++l)
      if (set_distance(static_cast<int>(i), static_cast<int>(l)) <= 0)
        throw GeometryError("PolyhedronSet: pieces are not disjoint");
}

double PolyhedronSet::set_distance(int i, int l) const {
  double d = 1e300;
  for (const auto& fa : pieces[i].facets)
    for (const auto& sa : fa.simplexes)
      for (const auto& fb : pieces[l].facets)
        for (const auto& sb : fb.simplexes) d = std::min(d, dist_simplex_simplex(sa, sb));
  return d;
}

double PolyhedronSet::min_pairwise_distance() const {
  double d = 1e300;
  const int m = static_cast<int>(pieces.size());
  // bbox prefilter keeps the all-pairs scan cheap for large piece sets
  std::vector<BBox> boxes;
  boxes.reserve(m);
  for (const auto& pc : pieces) boxes.push_back(pc.bbox());
  for (int i = 0; i < m; ++i)
    for (int l = i + 1; l < m; ++l) {
      double gap = 0;
      for (int c = 0; c < dim; ++c) {
        const double lo = std::max(boxes[i].lo[c], boxes[l].lo[c]);
        const double hi = std::min(boxes[i].hi[c], boxes[l].hi[c]);
        if (lo > hi) gap += (lo - hi) * (lo - hi);
      }
      if (gap >= d * d) continue;
      d = std::min(d, set_distance(i, l));
    }
  return d;
}

// ---------------------------------------------------------------------------
// distances

double dist_point_segment(const Vec& p, const Vec& a, const Vec& b) {
  const Vec ab = b - a;
  const double t = std::clamp(dot(p - a, ab) / std::max(norm2(ab), 1e-300), 0.0, 1.0);
  return dist(p, a + ab * t);
}

double dist_segment_segment(const Vec& a0, const Vec& a1, const Vec& b0, const Vec& b1) {
  const Vec da = a1 - a0, db = b1 - b0, r = a0 - b0;
  const double A = norm2(da), B = dot(da, db), C = norm2(db);
  const double D = dot(da, r), E = dot(db, r);
  const double den = A * C - B * B;
  double s = 0, t = 0;
  if (den > 1e-300) s = std::clamp((B * E - C * D) / den, 0.0, 1.0);
  t = C > 1e-300 ? std::clamp((B * s + E) / C, 0.0, 1.0) : 0.0;
  s = A > 1e-300 ? std::clamp((B * t - D) / A, 0.0, 1.0) : 0.0;
  const double d = dist(a0 + da * s, b0 + db * t);
  // clamped Newton step above can miss the optimum in degenerate setups; the
  // endpoint checks make the result exact for segments
  double best = d;
  best = std::min(best, dist_point_segment(a0, b0, b1));
  best = std::min(best, dist_point_segment(a1, b0, b1));
  best = std::min(best, dist_point_segment(b0, a0, a1));
  best = std::min(best, dist_point_segment(b1, a0, a1));
  return best;
}

double dist_point_triangle(const Vec& p, const Vec& a, const Vec& b, const Vec& c) {
  // Ericson, Real-Time Collision Detection, 5.1.5
  const Vec ab = b - a, ac = c - a, ap = p - a;
  const double d1 = dot(ab, ap), d2 = dot(ac, ap);
  if (d1 <= 0 && d2 <= 0) return dist(p, a);
  const Vec bp = p - b;
  const double d3 = dot(ab, bp), d4 = dot(ac, bp);
  if (d3 >= 0 && d4 <= d3) return dist(p, b);
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return dist(p, a + ab * (d1 / (d1 - d3)));
  const Vec cp = p - c;
  const double d5 = dot(ab, cp), d6 = dot(ac, cp);
  if (d6 >= 0 && d5 <= d6) return dist(p, c);
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return dist(p, a + ac * (d2 / (d2 - d6)));
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0)
    return dist(p, b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6))));
  const double den = 1.0 / (va + vb + vc);
  return dist(p, a + ab * (vb * den) + ac * (vc * den));
}

namespace {

bool segment_hits_triangle(const Vec& s0, const Vec& s1, const Vec& a, const Vec& b, const Vec& c) {
  const Vec n = cross(b - a, c - a);
  const double d0 = dot(n, s0 - a), d1 = dot(n, s1 - a);
  if ((d0 > 0 && d1 > 0) || (d0 < 0 && d1 < 0)) return false;
  if (std::abs(d0 - d1) < 1e-300) return false;
  const double t = d0 / (d0 - d1);
  const Vec p = s0 + (s1 - s0) * t;
  // barycentric containment
  const Vec v0 = b - a, v1 = c - a, v2 = p - a;
  const double dd00 = dot(v0, v0), dd01 = dot(v0, v1), dd11 = dot(v1, v1);
  const double dd20 = dot(v2, v0), dd21 = dot(v2, v1);
  const double den = dd00 * dd11 - dd01 * dd01;
  if (std::abs(den) < 1e-300) return false;
  const double v = (dd11 * dd20 - dd01 * dd21) / den;
  const double w = (dd00 * dd21 - dd01 * dd20) / den;
  return v >= -1e-12 && w >= -1e-12 && v + w <= 1 + 1e-12;
}

double dist_segment_triangle(const Vec& s0, const Vec& s1, const Vec& a, const Vec& b, const Vec& c) {
  if (segment_hits_triangle(s0, s1, a, b, c)) return 0.0;
  double d = std::min(dist_point_triangle(s0, a, b, c), dist_point_triangle(s1, a, b, c));
  d = std::min(d, dist_segment_segment(s0, s1, a, b));
  d = std::min(d, dist_segment_segment(s0, s1, b, c));
  d = std::min(d, dist_segment_segment(s0, s1, c, a));
  return d;
}

}  // namespace

double dist_simplex_simplex(const Simplex& a, const Simplex& b) {
  if (a.npts == 2 && b.npts == 2) return dist_segment_segment(a.p[0], a.p[1], b.p[0], b.p[1]);
  if (a.npts == 2) return dist_segment_triangle(a.p[0], a.p[1], b.p[0], b.p[1], b.p[2]);
  if (b.npts == 2) return dist_segment_triangle(b.p[0], b.p[1], a.p[0], a.p[1], a.p[2]);
  double d = 1e300;
  for (int i = 0; i < 3; ++i) {
    d = std::min(d, dist_segment_triangle(a.p[i], a.p[(i + 1) % 3], b.p[0], b.p[1], b.p[2]));
    d = std::min(d, dist_segment_triangle(b.p[i], b.p[(i + 1) % 3], a.p[0], a.p[1], a.p[2]));
  }
  return d;
}

}  // namespace polypart
