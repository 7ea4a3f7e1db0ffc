#include "kwl/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "kwl/graph.hpp"

namespace kwl {

void CircleTypeSet::validate() const {
  if (components.empty()) throw KwlError("circle-type set must be non-empty");
  for (size_t i = 0; i < components.size(); ++i) {
    if (components[i].radius < 0 || components[i].radius >= kPi)
      throw KwlError("cap radius out of range");
    for (size_t j = i + 1; j < components.size(); ++j) {
      const double gap = spherical_distance(components[i].center, components[j].center) -
                         components[i].radius - components[j].radius;
      if (gap <= 1e-9)
        throw KwlError("components " + std::to_string(i) + " and " + std::to_string(j) +
                       " are not disjoint");
    }
  }
}

CircleTypeSet CircleTypeSet::from_chart_disks(std::span<const PlanarDisk> disks) {
  CircleTypeSet out;
  for (const auto& d : disks) out.components.push_back(chart_disk_to_cap(d));
  out.validate();
  return out;
}

std::vector<PlanarDisk> CircleTypeSet::to_chart_disks() const {
  std::vector<PlanarDisk> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(cap_to_chart_disk(c));
  return out;
}

CircleTypeSet approximate_circle_type(const CircleTypeSet& X, int n, double l_n) {
  if (n < 1 || n > static_cast<int>(X.components.size()))
    throw KwlError("approximate_circle_type: component count out of range");
  if (l_n <= 0) throw KwlError("approximate_circle_type: l_n must be positive");
  CircleTypeSet out;
  for (int i = 0; i < n; ++i) {
    const SphericalCap& cap = X.components[i];
    if (cap.radius > 0) {
      out.components.push_back(cap);
    } else {
      PlanarDisk d = cap_to_chart_disk(cap);
      d.r = l_n;
      out.components.push_back(chart_disk_to_cap(d));
    }
  }
  try {
    out.validate();
  } catch (const KwlError& e) {
    throw KwlError(std::string("inflation by l_n breaks disjointness: ") + e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Incremental convex hull.
// ---------------------------------------------------------------------------
namespace {

double orient(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p) {
  const Vec3 u = b - a, v = c - a, w = p - a;
  const double det = u.cross(v).dot(w);
  const double scale = u.norm() * v.norm() * w.norm();
  if (std::abs(det) > 1e-13 * scale) return det;
  // Near-degenerate: retry in extended precision.
  long double ux = b.x() - a.x(), uy = b.y() - a.y(), uz = b.z() - a.z();
  long double vx = c.x() - a.x(), vy = c.y() - a.y(), vz = c.z() - a.z();
  long double wx = p.x() - a.x(), wy = p.y() - a.y(), wz = p.z() - a.z();
  long double d = (uy * vz - uz * vy) * wx + (uz * vx - ux * vz) * wy +
                  (ux * vy - uy * vx) * wz;
  if (std::abs(static_cast<double>(d)) < 1e-17 * scale) return 0.0;
  return static_cast<double>(d);
}

struct RawHull {
  std::vector<std::array<int, 3>> faces;
};

// Incremental hull over points assumed in general position (caller jitters).
// Throws on 2-dimensional input.
RawHull incremental_hull(const std::vector<Vec3>& pts, Rng& order_rng) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw KwlError("hull needs at least 4 sample points");

  // Initial simplex: spread-out extremes.
  int i0 = 0;
  for (int i = 1; i < n; ++i)
    if (pts[i].x() < pts[i0].x()) i0 = i;
  int i1 = -1;
  double best = -1;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  int i2 = -1;
  best = -1;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).cross(pts[i] - pts[i1]).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (best < 1e-12) throw KwlError("degenerate hull: samples are collinear");
  int i3 = -1;
  best = -1;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(orient(pts[i0], pts[i1], pts[i2], pts[i]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (best < 1e-12)
    throw KwlError(
        "degenerate 2-dimensional hull: all ideal samples lie on one circle; "
        "the metric-double convention is documented, not implemented");

  RawHull hull;
  auto add_face = [&](int a, int b, int c, int opposite) {
    if (orient(pts[a], pts[b], pts[c], pts[opposite]) > 0) std::swap(b, c);
    hull.faces.push_back({a, b, c});
  };
  add_face(i0, i1, i2, i3);
  add_face(i0, i1, i3, i2);
  add_face(i0, i2, i3, i1);
  add_face(i1, i2, i3, i0);

  std::vector<int> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);
  for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
    std::swap(order[i], order[order_rng.index(i + 1)]);

  std::vector<char> visible;
  for (int p : order) {
    const int nf = static_cast<int>(hull.faces.size());
    visible.assign(nf, 0);
    bool any = false;
    for (int f = 0; f < nf; ++f) {
      const auto& t = hull.faces[f];
      if (orient(pts[t[0]], pts[t[1]], pts[t[2]], pts[p]) > 0) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;  // interior point

    std::map<std::pair<int, int>, int> dir_edge_face;
    for (int f = 0; f < nf; ++f) {
      const auto& t = hull.faces[f];
      for (int e = 0; e < 3; ++e)
        dir_edge_face[{t[e], t[(e + 1) % 3]}] = f;
    }
    std::vector<std::array<int, 3>> next;
    for (int f = 0; f < nf; ++f)
      if (!visible[f]) next.push_back(hull.faces[f]);
    for (int f = 0; f < nf; ++f) {
      if (!visible[f]) continue;
      const auto& t = hull.faces[f];
      for (int e = 0; e < 3; ++e) {
        const int a = t[e], b = t[(e + 1) % 3];
        const auto it = dir_edge_face.find({b, a});
        if (it == dir_edge_face.end()) throw KwlError("hull: open horizon");
        if (!visible[it->second]) next.push_back({a, b, p});
      }
    }
    hull.faces.swap(next);
  }
  return hull;
}

}  // namespace

Vec3 HullSurface::interior_point() const {
  Vec3 c = Vec3::Zero();
  for (const auto& v : vertices) c += v;
  return c / static_cast<double>(vertices.size());
}

bool HullSurface::contains(const Vec3& y, double tol) const {
  for (const auto& f : faces)
    if (f.normal.dot(y) > f.offset + tol) return false;
  return true;
}

int HullSurface::euler_characteristic() const {
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(faces.size());
}

HullSurface build_hull(const CircleTypeSet& Y, int samples_per_component,
                       std::uint64_t perturb_seed) {
  Y.validate();
  if (samples_per_component < 8) throw KwlError("need >= 8 samples per component");

  std::vector<Vec3> samples;
  std::vector<int> sample_comp;
  for (size_t ci = 0; ci < Y.components.size(); ++ci) {
    const SphericalCap& cap = Y.components[ci];
    if (cap.radius == 0) {
      samples.push_back(cap.center.u);
      sample_comp.push_back(static_cast<int>(ci));
    } else {
      for (int j = 0; j < samples_per_component; ++j) {
        samples.push_back(cap_boundary_point(cap, 2.0 * kPi * j / samples_per_component).u);
        sample_comp.push_back(static_cast<int>(ci));
      }
    }
  }

  // Cocircular cap samples make exact-degenerate hull input; a recorded
  // radial jitter breaks the ties, combinatorics are kept, coordinates are
  // restored afterwards.
  std::string last_err = "hull construction failed";
  for (int attempt = 0; attempt < 5; ++attempt) {
    const std::uint64_t seed = perturb_seed + 1000003ull * attempt;
    Rng rng(seed);
    std::vector<Vec3> jittered(samples.size());
    for (size_t i = 0; i < samples.size(); ++i)
      jittered[i] = samples[i] * (1.0 + 1e-10 * (0.5 + rng.uniform01()));

    RawHull raw;
    try {
      raw = incremental_hull(jittered, rng);
    } catch (const KwlError& e) {
      if (std::string(e.what()).find("degenerate") != std::string::npos) throw;
      last_err = e.what();
      continue;
    }

    // Assemble with original coordinates.
    std::vector<int> vmap(samples.size(), -1);
    HullSurface s;
    s.perturbation_seed = seed;
    for (const auto& t : raw.faces)
      for (int v : t)
        if (vmap[v] < 0) {
          vmap[v] = static_cast<int>(s.vertices.size());
          s.vertices.push_back(samples[v]);
          s.vertex_component.push_back(sample_comp[v]);
        }
    Vec3 inner = Vec3::Zero();
    for (const auto& v : s.vertices) inner += v;
    inner /= static_cast<double>(s.vertices.size());

    bool ok = true;
    for (const auto& t : raw.faces) {
      HullSurface::Face f;
      f.v = {vmap[t[0]], vmap[t[1]], vmap[t[2]]};
      const Vec3 a = s.vertices[f.v[0]], b = s.vertices[f.v[1]], c = s.vertices[f.v[2]];
      Vec3 n = (b - a).cross(c - a);
      if (n.norm() < 1e-16) {
        ok = false;
        break;
      }
      n.normalize();
      if (n.dot(inner - a) > 0) {
        n = -n;
        std::swap(f.v[1], f.v[2]);
      }
      f.normal = n;
      f.offset = n.dot(a);
      const int c0 = s.vertex_component[f.v[0]];
      if (s.vertex_component[f.v[1]] == c0 && s.vertex_component[f.v[2]] == c0 &&
          Y.components[c0].radius > 0)
        f.cap_label = c0;
      s.faces.push_back(f);
    }
    if (!ok) {
      last_err = "zero-area face";
      continue;
    }

    std::map<std::pair<int, int>, HullSurface::Edge> edge_map;
    for (size_t fi = 0; fi < s.faces.size(); ++fi) {
      const auto& f = s.faces[fi];
      for (int e = 0; e < 3; ++e) {
        int a = f.v[e], b = f.v[(e + 1) % 3];
        if (a > b) std::swap(a, b);
        auto& ed = edge_map[{a, b}];
        if (ed.f0 < 0 && ed.f1 < 0) {
          ed.a = a;
          ed.b = b;
          ed.f0 = static_cast<int>(fi);
        } else if (ed.f1 < 0) {
          ed.f1 = static_cast<int>(fi);
        } else {
          ok = false;
        }
      }
    }
    if (!ok) {
      last_err = "non-manifold edge";
      continue;
    }
    for (auto& [key, ed] : edge_map) {
      if (ed.f1 < 0) {
        ok = false;
        break;
      }
      s.edges.push_back(ed);
    }
    if (!ok || s.euler_characteristic() != 2) {
      last_err = "hull boundary is not a 2-sphere";
      continue;
    }
    bool inside_all = true;
    for (const auto& p : samples)
      if (!s.contains(p, 1e-9)) inside_all = false;
    if (!inside_all) {
      last_err = "a sample escaped the hull";
      continue;
    }
    return s;
  }
  throw KwlError("build_hull: " + last_err + " after perturbation retries");
}

Vec3 surface_point_klein(const HullSurface& s, const SurfacePoint& p) {
  const auto& f = s.faces.at(p.face);
  return p.bary[0] * s.vertices[f.v[0]] + p.bary[1] * s.vertices[f.v[1]] +
         p.bary[2] * s.vertices[f.v[2]];
}

double edge_metric_length(const Vec3& a, const Vec3& b, SurfaceMetric m) {
  switch (m) {
    case SurfaceMetric::Hyperbolic:
      return klein_distance(BallPoint::klein(a), BallPoint::klein(b));
    case SurfaceMetric::EuclideanPoincare:
      return (klein_to_poincare_coords(a) - klein_to_poincare_coords(b)).norm();
    case SurfaceMetric::EuclideanKlein:
      return (a - b).norm();
  }
  return 0;
}

SampleGraph make_sample_graph(const HullSurface& s, int level, double truncation_margin) {
  if (level < 2) throw KwlError("sample graph level must be >= 2");
  SampleGraph g;
  g.level = level;
  g.truncation_margin = truncation_margin;
  const double rmax = std::tanh(truncation_margin);

  std::map<std::pair<int, int>, int> edge_of;  // vertex pair -> edge index
  for (size_t ei = 0; ei < s.edges.size(); ++ei)
    edge_of[{s.edges[ei].a, s.edges[ei].b}] = static_cast<int>(ei);

  std::map<std::pair<int, int>, int> edge_node;  // (edge, step) -> node
  g.face_nodes.resize(s.faces.size());

  auto get_edge_node = [&](int va, int vb, int step, const Vec3& pos) -> int {
    int a = va, b = vb, t = step;
    if (a > b) {
      std::swap(a, b);
      t = level - step;
    }
    const int ei = edge_of.at({a, b});
    const auto key = std::make_pair(ei, t);
    auto it = edge_node.find(key);
    if (it != edge_node.end()) return it->second;
    const int id = static_cast<int>(g.pos.size());
    g.pos.push_back(pos);
    g.owner_face.push_back(-1);
    edge_node.emplace(key, id);
    return id;
  };

  for (size_t fi = 0; fi < s.faces.size(); ++fi) {
    const auto& f = s.faces[fi];
    const Vec3 A = s.vertices[f.v[0]], B = s.vertices[f.v[1]], C = s.vertices[f.v[2]];
    std::vector<int> nodes;
    for (int i = 0; i <= level; ++i) {
      for (int j = 0; j + i <= level; ++j) {
        const int k = level - i - j;
        // Skip ideal corners.
        if ((i == level) || (j == level) || (k == level)) continue;
        const Vec3 pos = (i * A + j * B + k * C) / static_cast<double>(level);
        if (pos.norm() > rmax) continue;
        int id;
        if (k == 0)
          id = get_edge_node(f.v[0], f.v[1], j, pos);
        else if (j == 0)
          id = get_edge_node(f.v[0], f.v[2], k, pos);
        else if (i == 0)
          id = get_edge_node(f.v[1], f.v[2], k, pos);
        else {
          id = static_cast<int>(g.pos.size());
          g.pos.push_back(pos);
          g.owner_face.push_back(static_cast<int>(fi));
        }
        nodes.push_back(id);
      }
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    g.face_nodes[fi] = nodes;
    // Faces are totally geodesic, so any straight chord inside one is a
    // surface path; connect all pairs within the face.
    for (size_t x = 0; x < nodes.size(); ++x) {
      for (size_t y = x + 1; y < nodes.size(); ++y) {
        g.edge_nodes.push_back({nodes[x], nodes[y]});
        const Vec3 &pa = g.pos[nodes[x]], &pb = g.pos[nodes[y]];
        g.edge_len.push_back({edge_metric_length(pa, pb, SurfaceMetric::Hyperbolic),
                              edge_metric_length(pa, pb, SurfaceMetric::EuclideanPoincare),
                              edge_metric_length(pa, pb, SurfaceMetric::EuclideanKlein)});
      }
    }
  }
  return g;
}

std::vector<std::vector<std::pair<int, double>>> SampleGraph::adjacency(
    SurfaceMetric m) const {
  std::vector<std::vector<std::pair<int, double>>> adj(pos.size());
  const int mi = static_cast<int>(m);
  for (size_t e = 0; e < edge_nodes.size(); ++e) {
    adj[edge_nodes[e][0]].push_back({edge_nodes[e][1], edge_len[e][mi]});
    adj[edge_nodes[e][1]].push_back({edge_nodes[e][0], edge_len[e][mi]});
  }
  return adj;
}

double surface_path_distance(const HullSurface& s, const SampleGraph& g,
                             const SurfacePoint& a, const SurfacePoint& b,
                             SurfaceMetric m) {
  const Vec3 pa = surface_point_klein(s, a);
  const Vec3 pb = surface_point_klein(s, b);
  const double rmax = std::tanh(g.truncation_margin);
  if (pa.norm() > rmax || pb.norm() > rmax)
    throw KwlError("surface point lies inside the ideal-vertex truncation margin");
  if (a.face == b.face) return edge_metric_length(pa, pb, m);

  WeightedGraph wg;
  wg.resize(static_cast<int>(g.pos.size()) + 2);
  const int sa = static_cast<int>(g.pos.size()), sb = sa + 1;
  const int mi = static_cast<int>(m);
  for (size_t e = 0; e < g.edge_nodes.size(); ++e)
    wg.add_edge(g.edge_nodes[e][0], g.edge_nodes[e][1], g.edge_len[e][mi]);
  for (int node : g.face_nodes[a.face]) wg.add_edge(sa, node, edge_metric_length(pa, g.pos[node], m));
  for (int node : g.face_nodes[b.face]) wg.add_edge(sb, node, edge_metric_length(pb, g.pos[node], m));
  const auto sp = dijkstra(wg, {sa});
  return sp.dist[sb];
}

// ---------------------------------------------------------------------------
// Area in the Poincare model.
// ---------------------------------------------------------------------------
namespace {

double flat_poincare_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 pa = klein_to_poincare_coords(a);
  const Vec3 pb = klein_to_poincare_coords(b);
  const Vec3 pc = klein_to_poincare_coords(c);
  return 0.5 * (pb - pa).cross(pc - pa).norm();
}

void area_recurse(const Vec3& a, const Vec3& b, const Vec3& c, double parent,
                  double rel_tol, int depth, int max_depth, double& acc, long& evals,
                  bool& converged) {
  const Vec3 ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
  const double s0 = flat_poincare_area(a, ab, ca);
  const double s1 = flat_poincare_area(ab, b, bc);
  const double s2 = flat_poincare_area(ca, bc, c);
  const double s3 = flat_poincare_area(ab, bc, ca);
  const double child = s0 + s1 + s2 + s3;
  evals += 4;
  if (std::abs(child - parent) <= rel_tol * (std::abs(child) + 1e-14) || depth >= max_depth) {
    // Richardson step: inscribed areas converge at second order.
    acc += child + (child - parent) / 3.0;
    if (depth >= max_depth && std::abs(child - parent) > rel_tol * (std::abs(child) + 1e-12))
      converged = false;
    return;
  }
  area_recurse(a, ab, ca, s0, rel_tol, depth + 1, max_depth, acc, evals, converged);
  area_recurse(ab, b, bc, s1, rel_tol, depth + 1, max_depth, acc, evals, converged);
  area_recurse(ca, bc, c, s2, rel_tol, depth + 1, max_depth, acc, evals, converged);
  area_recurse(ab, bc, ca, s3, rel_tol, depth + 1, max_depth, acc, evals, converged);
}

AreaResult integrate_triangles(const std::vector<std::array<Vec3, 3>>& tris,
                               double rel_tol, int max_depth) {
  AreaResult out;
  out.tol_achieved = rel_tol;
  for (const auto& t : tris) {
    const double parent = flat_poincare_area(t[0], t[1], t[2]);
    ++out.evaluations;
    area_recurse(t[0], t[1], t[2], parent, rel_tol, 0, max_depth, out.value,
                 out.evaluations, out.converged);
  }
  return out;
}

}  // namespace

AreaResult euclidean_area_poincare(const HullSurface& s, double rel_tol, int max_depth) {
  std::vector<std::array<Vec3, 3>> tris;
  tris.reserve(s.faces.size());
  for (const auto& f : s.faces)
    tris.push_back({s.vertices[f.v[0]], s.vertices[f.v[1]], s.vertices[f.v[2]]});
  return integrate_triangles(tris, rel_tol, max_depth);
}

double dome_area_poincare(double rho) {
  if (rho <= 0 || rho > kPi / 2.0 + 1e-12)
    throw KwlError("dome area defined for cap radius in (0, pi/2]");
  const double sr = std::sin(rho), cr = std::cos(rho);
  if (cr < 1e-8) return kPi;  // hemispherical cap: flat equatorial disk
  return 2.0 * kPi * sr * sr * (1.0 - sr) / (cr * cr);
}

AreaResult dome_area_poincare_quadrature(double rho, int boundary_samples,
                                         double rel_tol) {
  const Vec3 n(0, 0, 1);
  const Vec3 center = std::cos(rho) * n;
  std::vector<std::array<Vec3, 3>> tris;
  for (int j = 0; j < boundary_samples; ++j) {
    const double t0 = 2.0 * kPi * j / boundary_samples;
    const double t1 = 2.0 * kPi * (j + 1) / boundary_samples;
    const Vec3 b0(std::sin(rho) * std::cos(t0), std::sin(rho) * std::sin(t0), std::cos(rho));
    const Vec3 b1(std::sin(rho) * std::cos(t1), std::sin(rho) * std::sin(t1), std::cos(rho));
    tris.push_back({center, b0, b1});
  }
  return integrate_triangles(tris, rel_tol, 24);
}

// ---------------------------------------------------------------------------
// Hausdorff distances.
// ---------------------------------------------------------------------------

double point_to_cap_distance(const SpherePoint& u, const SphericalCap& cap,
                             MetricTag tag) {
  const double ang = std::max(0.0, spherical_distance(u, cap.center) - cap.radius);
  if (tag == MetricTag::Spherical) return ang;
  return 2.0 * std::sin(0.5 * ang);
}

namespace {

std::vector<SpherePoint> sample_cap(const SphericalCap& cap, int n) {
  std::vector<SpherePoint> out;
  if (cap.radius == 0) {
    out.push_back(cap.center);
    return out;
  }
  const int nb = std::max(16, n / 2);
  for (int j = 0; j < nb; ++j) out.push_back(cap_boundary_point(cap, 2.0 * kPi * j / nb));
  // Golden-angle spiral over the interior.
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  const int ni = n - nb;
  Vec3 e1, e2;
  cap_frame(cap.center.u, e1, e2);
  for (int j = 0; j < ni; ++j) {
    const double r = cap.radius * std::sqrt((j + 0.5) / ni);
    const double t = golden * j;
    const Vec3 u = std::cos(r) * cap.center.u +
                   std::sin(r) * (std::cos(t) * e1 + std::sin(t) * e2);
    out.push_back(SpherePoint{u.normalized()});
  }
  return out;
}

double directed_hausdorff(const CircleTypeSet& A, const CircleTypeSet& B,
                          MetricTag tag, int samples) {
  double sup = 0;
  for (const auto& capA : A.components) {
    for (const auto& u : sample_cap(capA, samples)) {
      double inf = std::numeric_limits<double>::infinity();
      for (const auto& capB : B.components)
        inf = std::min(inf, point_to_cap_distance(u, capB, tag));
      sup = std::max(sup, inf);
    }
  }
  return sup;
}

}  // namespace

HausdorffReport hausdorff_distance(const CircleTypeSet& A, const CircleTypeSet& B,
                                   MetricTag tag, int samples_per_component) {
  A.validate();
  B.validate();
  const double d = std::max(directed_hausdorff(A, B, tag, samples_per_component),
                            directed_hausdorff(B, A, tag, samples_per_component));
  return HausdorffReport{d, tag};
}

HausdorffReport hausdorff_points(std::span<const Vec3> A, std::span<const Vec3> B,
                                 MetricTag tag) {
  if (A.empty() || B.empty()) throw KwlError("hausdorff over empty set");
  auto dist = [&](const Vec3& a, const Vec3& b) {
    if (tag == MetricTag::Euclidean) return (a - b).norm();
    return std::atan2(a.cross(b).norm(), a.dot(b));
  };
  double sup = 0;
  for (const auto& a : A) {
    double inf = std::numeric_limits<double>::infinity();
    for (const auto& b : B) inf = std::min(inf, dist(a, b));
    sup = std::max(sup, inf);
  }
  for (const auto& b : B) {
    double inf = std::numeric_limits<double>::infinity();
    for (const auto& a : A) inf = std::min(inf, dist(a, b));
    sup = std::max(sup, inf);
  }
  return HausdorffReport{sup, tag};
}

}  // namespace kwl
