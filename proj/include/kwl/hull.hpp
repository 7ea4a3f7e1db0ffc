#ifndef KWL_HULL_HPP
#define KWL_HULL_HPP

#include <array>
#include <optional>

#include "kwl/models.hpp"

namespace kwl {

// Finite disjoint union of closed spherical caps and points: the ideal
// boundary data whose hyperbolic convex hull the module builds.
struct CircleTypeSet {
  std::vector<SphericalCap> components;

  void validate() const;  // non-empty, pairwise disjoint with 1e-9 margin
  static CircleTypeSet from_chart_disks(std::span<const PlanarDisk> disks);
  std::vector<PlanarDisk> to_chart_disks() const;  // requires pole-free caps
};

// First n components in the stored (caller-chosen density) order; disk
// components kept as-is, point components inflated to chart-Euclidean
// radius l_n. Throws, naming the pair, if inflation breaks disjointness.
CircleTypeSet approximate_circle_type(const CircleTypeSet& X, int n, double l_n);

// ---------------------------------------------------------------------------
// Polyhedral hull boundary in the Klein ball.
// ---------------------------------------------------------------------------
struct HullSurface {
  struct Face {
    std::array<int, 3> v{};  // outward-oriented
    int cap_label = -1;      // component id for cap faces, -1 for lateral
    Vec3 normal{0, 0, 0};    // unit outward
    double offset = 0;       // plane n.y = offset, hull side n.y <= offset
  };
  struct Edge {
    int a = 0, b = 0;
    int f0 = -1, f1 = -1;
    bool ideal_a = true, ideal_b = true;
    double klein_length = std::numeric_limits<double>::infinity();
  };

  std::vector<Vec3> vertices;         // Klein coordinates (ideal samples)
  std::vector<int> vertex_component;  // source component of each vertex
  std::vector<Face> faces;
  std::vector<Edge> edges;
  std::uint64_t perturbation_seed = 0;

  Vec3 interior_point() const;  // strictly inside the hull
  bool contains(const Vec3& y, double tol = 1e-10) const;
  int euler_characteristic() const;
};

// Euclidean convex hull of M ideal boundary samples per component (Klein
// convexity equals Euclidean convexity). Degenerate coplanar input raises a
// "2-dimensional hull" error: the metric-double case is documented out.
HullSurface build_hull(const CircleTypeSet& Y, int samples_per_component = 64,
                       std::uint64_t perturb_seed = 7);

// ---------------------------------------------------------------------------
// Intrinsic path metric via a refined lattice graph on the faces.
// ---------------------------------------------------------------------------
enum class SurfaceMetric { Hyperbolic, EuclideanPoincare, EuclideanKlein };

struct SurfacePoint {
  int face = 0;
  Vec3 bary{1.0 / 3, 1.0 / 3, 1.0 / 3};
};

Vec3 surface_point_klein(const HullSurface& s, const SurfacePoint& p);

struct SampleGraph {
  int level = 0;
  double truncation_margin = 10.0;  // hyperbolic distance from the origin
  std::vector<Vec3> pos;            // Klein coordinates, strictly interior
  std::vector<int> owner_face;
  std::vector<std::array<int, 2>> edge_nodes;
  std::vector<std::array<double, 3>> edge_len;  // per SurfaceMetric
  std::vector<std::vector<int>> face_nodes;     // node ids per face
  std::vector<std::vector<std::pair<int, double>>> adjacency(SurfaceMetric m) const;
};

SampleGraph make_sample_graph(const HullSurface& s, int level = 6,
                              double truncation_margin = 10.0);

double edge_metric_length(const Vec3& a, const Vec3& b, SurfaceMetric m);

// Shortest-path length between two surface points in the refined graph.
// Over-approximates the intrinsic distance; non-increasing in level.
double surface_path_distance(const HullSurface& s, const SampleGraph& g,
                             const SurfacePoint& a, const SurfacePoint& b,
                             SurfaceMetric m = SurfaceMetric::Hyperbolic);

// ---------------------------------------------------------------------------
// Euclidean area of the Poincare-model image of the hull boundary.
// ---------------------------------------------------------------------------
struct AreaResult {
  double value = 0;
  double tol_achieved = 0;
  long evaluations = 0;
  bool converged = true;
};

AreaResult euclidean_area_poincare(const HullSurface& s, double rel_tol = 1e-5,
                                   int max_depth = 22);

// Area of the single geodesic dome over a cap of angular radius rho, in the
// Poincare model: closed form and an independent quadrature of the same
// integrand used to validate it.
double dome_area_poincare(double rho);
AreaResult dome_area_poincare_quadrature(double rho, int boundary_samples = 64,
                                         double rel_tol = 1e-6);

// ---------------------------------------------------------------------------
// Hausdorff distances.
// ---------------------------------------------------------------------------
enum class MetricTag { Euclidean, Spherical };

struct HausdorffReport {
  double value = 0;
  MetricTag metric = MetricTag::Spherical;
};

HausdorffReport hausdorff_distance(const CircleTypeSet& A, const CircleTypeSet& B,
                                   MetricTag tag, int samples_per_component = 512);
HausdorffReport hausdorff_points(std::span<const Vec3> A, std::span<const Vec3> B,
                                 MetricTag tag);

// Distance from a sphere point to a closed cap (angular or chordal).
double point_to_cap_distance(const SpherePoint& u, const SphericalCap& cap,
                             MetricTag tag);

}  // namespace kwl

#endif
