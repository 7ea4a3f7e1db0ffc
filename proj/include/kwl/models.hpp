#ifndef KWL_MODELS_HPP
#define KWL_MODELS_HPP

#include "kwl/geom.hpp"

namespace kwl {

// ---------------------------------------------------------------------------
// Ball models of hyperbolic 3-space and the unit sphere at infinity.
//
// Chart convention, used consistently everywhere: the sphere S^2 is charted
// on the extended plane by stereographic projection from the north pole
// (0,0,1), z = (x1 + i x2) / (1 - x3). Spherical distances are angular, so
// S^2 has diameter pi and cap radii are angular radii.
// ---------------------------------------------------------------------------

enum class BallModel { Poincare, Klein };

struct BallPoint {
  Vec3 x{0, 0, 0};
  BallModel model = BallModel::Poincare;

  static BallPoint poincare(const Vec3& x);
  static BallPoint klein(const Vec3& x);
};

struct SpherePoint {
  Vec3 u{0, 0, 1};

  static SpherePoint of(const Vec3& v);  // validates | |v| - 1 | <= 1e-12
};

double poincare_distance(const BallPoint& a, const BallPoint& b);
double klein_distance(const BallPoint& a, const BallPoint& b);

// Psi(x) = 2x / (1 + |x|^2), isometry Poincare -> Klein; fixes the boundary.
Vec3 poincare_to_klein_coords(const Vec3& x);
Vec3 klein_to_poincare_coords(const Vec3& y);
BallPoint poincare_to_klein(const BallPoint& p);
BallPoint klein_to_poincare(const BallPoint& p);

double spherical_distance(const SpherePoint& a, const SpherePoint& b);

// Stereographic chart S^2 <-> C-hat. The north pole maps to infinity; callers
// that may hit it use the is_infinite flag.
struct ChartPoint {
  Cplx z{0, 0};
  bool is_infinite = false;
};
ChartPoint sphere_to_plane(const SpherePoint& p);
SpherePoint plane_to_sphere(const ChartPoint& z);
SpherePoint plane_to_sphere(Cplx z);

// Round disk (or point, r == 0) in the plane chart.
struct PlanarDisk {
  Cplx c{0, 0};
  double r = 0;
};

// Spherical cap; radius is angular, radius == 0 encodes a point component.
struct SphericalCap {
  SpherePoint center;
  double radius = 0;
};

// Chart circle <-> spherical circle conversions.
SphericalCap chart_disk_to_cap(const PlanarDisk& d);
// Requires the cap to avoid the north pole (chart image bounded).
PlanarDisk cap_to_chart_disk(const SphericalCap& cap);

// ---------------------------------------------------------------------------
// Moebius transformations of C-hat, det-normalized 2x2 complex matrices.
// ---------------------------------------------------------------------------
struct MobiusMap {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();

  static MobiusMap identity();
  static MobiusMap from_matrix(const Eigen::Matrix2cd& m);
  static MobiusMap affine(Cplx a, Cplx b);  // z -> a z + b, a != 0
  static MobiusMap inversion_about(Cplx p); // z -> 1 / (z - p)
  // Sends the three pairwise distinct points to (0, 1, infinity).
  static MobiusMap three_points_to_standard(const SpherePoint& a,
                                            const SpherePoint& b,
                                            const SpherePoint& c);

  ChartPoint apply(const ChartPoint& z) const;
  Cplx apply_finite(Cplx z) const;  // throws if the image is infinite
  SpherePoint apply(const SpherePoint& p) const;
  SphericalCap apply(const SphericalCap& cap) const;
  MobiusMap inverse() const;
  MobiusMap then(const MobiusMap& next) const;  // next(this(z))
};

// Hyperbolic translation of the Poincare ball taking p to the origin;
// extends continuously to the closed ball, hence acts on ideal points too.
struct BallTranslation {
  Vec3 p{0, 0, 0};  // the point carried to 0, |p| < 1

  static BallTranslation to_origin(const BallPoint& point);
  Vec3 apply(const Vec3& x) const;
  Vec3 apply_inverse(const Vec3& x) const;
  SpherePoint apply(const SpherePoint& s) const;
  SpherePoint apply_inverse(const SpherePoint& s) const;
};

// Scale-and-translate normalization placing a finite disk family inside the
// round annulus {1 < |z| < 2}. Throws if no Euclidean similarity can do it;
// the feasibility certificate (best achieved modulus ratio) rides along.
struct AnnulusNormalization {
  Cplx shift{0, 0};  // applied first: z - shift
  double scale = 1;  // then: scale * (z - shift)
  double min_mod = 0, max_mod = 0;  // achieved moduli of the image set

  Cplx apply(Cplx z) const { return scale * (z - shift); }
  PlanarDisk apply(const PlanarDisk& d) const {
    return PlanarDisk{apply(d.c), scale * d.r};
  }
};
AnnulusNormalization normalize_disks_to_annulus(std::span<const PlanarDisk> disks);

// ---------------------------------------------------------------------------
// Central extensions (cone maps of circle homeomorphisms).
// ---------------------------------------------------------------------------

// Monotone degree-one boundary correspondence between the circles of radius
// r and R, sampled as angle pairs. Target angles are stored lifted, so
// dst is strictly increasing with total increase 2*pi.
struct CircleHomeoSample {
  double r = 1, R = 1;
  std::vector<double> src;  // strictly increasing in [0, 2 pi)
  std::vector<double> dst;  // lifted, dst.back() - dst.front() < 2 pi

  void validate() const;
  double target_angle(double theta) const;  // periodic monotone interpolation
  Cplx boundary(double theta) const;        // point of the target circle
};

// F(z) = (|z| / r) f(r z / |z|); F(0) = 0.
Cplx central_extension(const CircleHomeoSample& f, Cplx z);

// Boundary map between two spherical caps of radius <= pi/2, given as a
// circle correspondence in each cap's canonical boundary frame.
struct CapBoundaryMap {
  SphericalCap src;
  SphericalCap dst;
  CircleHomeoSample f;  // angles: src-frame -> dst-frame, radii sin(s)
};

// Deterministic orthonormal frame (e1, e2) in the plane orthogonal to n.
void cap_frame(const Vec3& n, Vec3& e1, Vec3& e2);
SpherePoint cap_boundary_point(const SphericalCap& cap, double angle);

// Radial projection from the antipode between a cap and its flat spanning
// disk, and the spherical central extension rho_dst o F o rho_src^{-1}.
Vec3 cap_flatten(const SphericalCap& cap, const SpherePoint& w);     // cap -> flat disk
SpherePoint cap_inflate(const SphericalCap& cap, const Vec3& x);     // flat disk -> cap
SpherePoint spherical_central_extension(const CapBoundaryMap& fmap,
                                        const SpherePoint& x);

// ---------------------------------------------------------------------------
// Modulus of continuity on sampled maps.
// ---------------------------------------------------------------------------
struct DistancePair {
  double source = 0;
  double target = 0;
};

// sup of target distances over sampled pairs at source distance <= delta.
double modulus_of_continuity(std::span<const DistancePair> pairs, double delta);
// Smallest positive sampled source distance: the resolution floor below
// which the sampled modulus is vacuous.
double sampling_floor(std::span<const DistancePair> pairs);

}  // namespace kwl

#endif
