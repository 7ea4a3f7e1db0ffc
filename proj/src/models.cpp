#include "kwl/models.hpp"

#include <algorithm>
#include <cmath>

namespace kwl {

namespace {

void check_interior(const Vec3& x) {
  if (x.norm() >= 1.0 - kInteriorGuard)
    throw KwlError("ball point has norm >= 1 - 1e-12; treat it as ideal");
}

// Homogeneous lift of a sphere point to CP^1, stable at both poles.
void sphere_to_homogeneous(const Vec3& u, Cplx& alpha, Cplx& beta) {
  if (u.z() <= 0.5) {
    alpha = Cplx(u.x(), u.y());
    beta = Cplx(1.0 - u.z(), 0.0);
  } else {
    alpha = Cplx(1.0 + u.z(), 0.0);
    beta = Cplx(u.x(), -u.y());
  }
}

SpherePoint homogeneous_to_sphere(Cplx alpha, Cplx beta) {
  const double na = std::norm(alpha), nb = std::norm(beta);
  const double den = na + nb;
  if (den <= 0) throw KwlError("degenerate homogeneous coordinates");
  const Cplx ab = alpha * std::conj(beta);
  Vec3 u(2.0 * ab.real() / den, 2.0 * ab.imag() / den, (na - nb) / den);
  return SpherePoint{u.normalized()};
}

// Spherical circle through three sphere points; cap side chosen to contain q.
SphericalCap cap_through(const Vec3& p1, const Vec3& p2, const Vec3& p3,
                         const Vec3& q) {
  Vec3 n = (p2 - p1).cross(p3 - p1);
  const double nn = n.norm();
  if (nn < 1e-14) throw KwlError("cap_through: collinear boundary samples");
  n /= nn;
  double h = n.dot(p1);
  if (q.dot(n) < h) {
    n = -n;
    h = -h;
  }
  SphericalCap cap;
  cap.center = SpherePoint{n};
  cap.radius = std::acos(std::clamp(h, -1.0, 1.0));
  return cap;
}

Cplx circumcenter(Cplx a, Cplx b, Cplx c) {
  const Cplx ba = b - a, ca = c - a;
  const double d = 2.0 * (ba.real() * ca.imag() - ba.imag() * ca.real());
  if (std::abs(d) < 1e-30) throw KwlError("circumcenter: collinear points");
  const double nba = std::norm(ba), nca = std::norm(ca);
  const double ux = (ca.imag() * nba - ba.imag() * nca) / d;
  const double uy = (ba.real() * nca - ca.real() * nba) / d;
  return a + Cplx(ux, uy);
}

}  // namespace

BallPoint BallPoint::poincare(const Vec3& x) {
  check_interior(x);
  return BallPoint{x, BallModel::Poincare};
}

BallPoint BallPoint::klein(const Vec3& x) {
  check_interior(x);
  return BallPoint{x, BallModel::Klein};
}

SpherePoint SpherePoint::of(const Vec3& v) {
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw KwlError("sphere point must have unit norm within 1e-12");
  return SpherePoint{v.normalized()};
}

double poincare_distance(const BallPoint& a, const BallPoint& b) {
  if (a.model != BallModel::Poincare || b.model != BallModel::Poincare)
    throw KwlError("poincare_distance expects Poincare-model points");
  check_interior(a.x);
  check_interior(b.x);
  const double A = (a.x - b.x).squaredNorm();
  const double B = (1.0 - a.x.squaredNorm()) * (1.0 - b.x.squaredNorm());
  const double delta = std::sqrt(A / (A + B));
  return 2.0 * std::atanh(delta);
}

double klein_distance(const BallPoint& a, const BallPoint& b) {
  if (a.model != BallModel::Klein || b.model != BallModel::Klein)
    throw KwlError("klein_distance expects Klein-model points");
  check_interior(a.x);
  check_interior(b.x);
  const double num = 1.0 - a.x.dot(b.x);
  const double den = std::sqrt((1.0 - a.x.squaredNorm()) * (1.0 - b.x.squaredNorm()));
  return std::acosh(std::max(1.0, num / den));
}

Vec3 poincare_to_klein_coords(const Vec3& x) {
  return 2.0 * x / (1.0 + x.squaredNorm());
}

Vec3 klein_to_poincare_coords(const Vec3& y) {
  const double s = std::sqrt(std::max(0.0, 1.0 - y.squaredNorm()));
  return y / (1.0 + s);
}

BallPoint poincare_to_klein(const BallPoint& p) {
  if (p.model != BallModel::Poincare) throw KwlError("expected Poincare point");
  return BallPoint{poincare_to_klein_coords(p.x), BallModel::Klein};
}

BallPoint klein_to_poincare(const BallPoint& p) {
  if (p.model != BallModel::Klein) throw KwlError("expected Klein point");
  return BallPoint{klein_to_poincare_coords(p.x), BallModel::Poincare};
}

double spherical_distance(const SpherePoint& a, const SpherePoint& b) {
  return std::atan2(a.u.cross(b.u).norm(), a.u.dot(b.u));
}

ChartPoint sphere_to_plane(const SpherePoint& p) {
  const Vec3& u = p.u;
  if (1.0 - u.z() < 1e-14) return ChartPoint{{0, 0}, true};
  return ChartPoint{Cplx(u.x(), u.y()) / (1.0 - u.z()), false};
}

SpherePoint plane_to_sphere(const ChartPoint& z) {
  if (z.is_infinite) return SpherePoint{Vec3(0, 0, 1)};
  return plane_to_sphere(z.z);
}

SpherePoint plane_to_sphere(Cplx z) {
  const double n = std::norm(z);
  Vec3 u(2.0 * z.real() / (n + 1.0), 2.0 * z.imag() / (n + 1.0), (n - 1.0) / (n + 1.0));
  return SpherePoint{u.normalized()};
}

SphericalCap chart_disk_to_cap(const PlanarDisk& d) {
  if (d.r == 0) return SphericalCap{plane_to_sphere(d.c), 0.0};
  const Vec3 p1 = plane_to_sphere(d.c + Cplx(d.r, 0)).u;
  const Vec3 p2 = plane_to_sphere(d.c + Cplx(0, d.r)).u;
  const Vec3 p3 = plane_to_sphere(d.c - Cplx(d.r, 0)).u;
  const Vec3 q = plane_to_sphere(d.c).u;
  return cap_through(p1, p2, p3, q);
}

PlanarDisk cap_to_chart_disk(const SphericalCap& cap) {
  if (spherical_distance(cap.center, SpherePoint{Vec3(0, 0, 1)}) <= cap.radius + 1e-12)
    throw KwlError("cap contains the chart pole; Moebius-normalize first");
  if (cap.radius == 0) return PlanarDisk{sphere_to_plane(cap.center).z, 0.0};
  const Cplx z1 = sphere_to_plane(cap_boundary_point(cap, 0.0)).z;
  const Cplx z2 = sphere_to_plane(cap_boundary_point(cap, 2.0 * kPi / 3.0)).z;
  const Cplx z3 = sphere_to_plane(cap_boundary_point(cap, 4.0 * kPi / 3.0)).z;
  const Cplx c = circumcenter(z1, z2, z3);
  return PlanarDisk{c, std::abs(z1 - c)};
}

MobiusMap MobiusMap::identity() { return MobiusMap{}; }

MobiusMap MobiusMap::from_matrix(const Eigen::Matrix2cd& m) {
  const Cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (std::abs(det) < 1e-30) throw KwlError("singular Moebius matrix");
  MobiusMap out;
  out.m = m / std::sqrt(det);
  return out;
}

MobiusMap MobiusMap::affine(Cplx a, Cplx b) {
  Eigen::Matrix2cd m;
  m << a, b, Cplx(0, 0), Cplx(1, 0);
  return from_matrix(m);
}

MobiusMap MobiusMap::inversion_about(Cplx p) {
  Eigen::Matrix2cd m;
  m << Cplx(0, 0), Cplx(1, 0), Cplx(1, 0), -p;
  return from_matrix(m);
}

MobiusMap MobiusMap::three_points_to_standard(const SpherePoint& a,
                                              const SpherePoint& b,
                                              const SpherePoint& c) {
  Cplx a1, a2, b1, b2, c1, c2;
  sphere_to_homogeneous(a.u, a1, a2);
  sphere_to_homogeneous(b.u, b1, b2);
  sphere_to_homogeneous(c.u, c1, c2);
  const Cplx kbc = b1 * c2 - b2 * c1;
  const Cplx kba = b1 * a2 - b2 * a1;
  if (std::abs(kbc) < 1e-18 || std::abs(kba) < 1e-18 ||
      std::abs(a1 * c2 - a2 * c1) < 1e-18)
    throw KwlError("three_points_to_standard requires pairwise distinct points");
  Eigen::Matrix2cd m;
  m << a2 * kbc, -a1 * kbc, c2 * kba, -c1 * kba;
  return from_matrix(m);
}

ChartPoint MobiusMap::apply(const ChartPoint& z) const {
  Cplx alpha, beta;
  if (z.is_infinite) {
    alpha = 1;
    beta = 0;
  } else {
    alpha = z.z;
    beta = 1;
  }
  const Cplx na = m(0, 0) * alpha + m(0, 1) * beta;
  const Cplx nb = m(1, 0) * alpha + m(1, 1) * beta;
  if (std::abs(nb) < 1e-280 * std::max(1.0, std::abs(na)))
    return ChartPoint{{0, 0}, true};
  return ChartPoint{na / nb, false};
}

Cplx MobiusMap::apply_finite(Cplx z) const {
  const ChartPoint w = apply(ChartPoint{z, false});
  if (w.is_infinite) throw KwlError("Moebius image is the point at infinity");
  return w.z;
}

SpherePoint MobiusMap::apply(const SpherePoint& p) const {
  Cplx alpha, beta;
  sphere_to_homogeneous(p.u, alpha, beta);
  return homogeneous_to_sphere(m(0, 0) * alpha + m(0, 1) * beta,
                               m(1, 0) * alpha + m(1, 1) * beta);
}

SphericalCap MobiusMap::apply(const SphericalCap& cap) const {
  if (cap.radius == 0) return SphericalCap{apply(cap.center), 0.0};
  const Vec3 p1 = apply(cap_boundary_point(cap, 0.0)).u;
  const Vec3 p2 = apply(cap_boundary_point(cap, 2.0 * kPi / 3.0)).u;
  const Vec3 p3 = apply(cap_boundary_point(cap, 4.0 * kPi / 3.0)).u;
  const Vec3 q = apply(cap.center).u;
  return cap_through(p1, p2, p3, q);
}

MobiusMap MobiusMap::inverse() const {
  Eigen::Matrix2cd inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return from_matrix(inv);
}

MobiusMap MobiusMap::then(const MobiusMap& next) const {
  return from_matrix(next.m * m);
}

BallTranslation BallTranslation::to_origin(const BallPoint& point) {
  BallPoint p = point.model == BallModel::Poincare ? point : klein_to_poincare(point);
  return BallTranslation{p.x};
}

Vec3 BallTranslation::apply(const Vec3& x) const {
  const double px = p.dot(x);
  const double den = 1.0 - 2.0 * px + p.squaredNorm() * x.squaredNorm();
  if (std::abs(den) < 1e-30) throw KwlError("ball translation: degenerate input");
  return ((1.0 - p.squaredNorm()) * x - (1.0 + x.squaredNorm() - 2.0 * px) * p) / den;
}

Vec3 BallTranslation::apply_inverse(const Vec3& x) const {
  return BallTranslation{-p}.apply(x);
}

SpherePoint BallTranslation::apply(const SpherePoint& s) const {
  return SpherePoint{apply(s.u).normalized()};
}

SpherePoint BallTranslation::apply_inverse(const SpherePoint& s) const {
  return SpherePoint{apply_inverse(s.u).normalized()};
}

namespace {

// Ratio max_i(|c_i - q| + r_i) / min_i(|c_i - q| - r_i); +inf when q is not
// strictly outside every disk.
double annulus_ratio(std::span<const PlanarDisk> disks, Cplx q, double* mmin,
                     double* mmax) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  for (const auto& d : disks) {
    const double dist = std::abs(d.c - q);
    lo = std::min(lo, dist - d.r);
    hi = std::max(hi, dist + d.r);
  }
  if (mmin) *mmin = lo;
  if (mmax) *mmax = hi;
  if (lo <= 0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

}  // namespace

AnnulusNormalization normalize_disks_to_annulus(std::span<const PlanarDisk> disks) {
  if (disks.empty()) throw KwlError("normalize_disks_to_annulus: empty set");
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (const auto& d : disks) {
    xlo = std::min(xlo, d.c.real() - d.r);
    xhi = std::max(xhi, d.c.real() + d.r);
    ylo = std::min(ylo, d.c.imag() - d.r);
    yhi = std::max(yhi, d.c.imag() + d.r);
  }
  const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
  Cplx center((xlo + xhi) / 2.0, (ylo + yhi) / 2.0);

  Cplx best_q = center;
  double best = std::numeric_limits<double>::infinity();
  double width = 1.5 * span;
  Cplx anchor = center;
  for (int level = 0; level < 6; ++level) {
    const int n = 41;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Cplx q = anchor + Cplx(width * (2.0 * i / (n - 1) - 1.0),
                                     width * (2.0 * j / (n - 1) - 1.0));
        const double v = annulus_ratio(disks, q, nullptr, nullptr);
        if (v < best) {
          best = v;
          best_q = q;
        }
      }
    }
    anchor = best_q;
    width *= 0.12;
  }
  if (!(best < 2.0 * (1.0 - 1e-9)))
    throw KwlError("no similarity places the set inside {1<|z|<2}; best modulus ratio " +
                   std::to_string(best));
  double lo = 0, hi = 0;
  annulus_ratio(disks, best_q, &lo, &hi);
  AnnulusNormalization out;
  out.shift = best_q;
  out.scale = std::sqrt(2.0 / (lo * hi));
  out.min_mod = out.scale * lo;
  out.max_mod = out.scale * hi;
  return out;
}

void CircleHomeoSample::validate() const {
  if (r <= 0 || R <= 0) throw KwlError("circle map: radii must be positive");
  if (src.size() < 3 || src.size() != dst.size())
    throw KwlError("circle map: need >= 3 matched angle samples");
  for (size_t i = 0; i + 1 < src.size(); ++i) {
    if (!(src[i] < src[i + 1])) throw KwlError("circle map: source angles not increasing");
    if (!(dst[i] < dst[i + 1])) throw KwlError("circle map: target angles not monotone");
  }
  if (!(src.front() >= 0 && src.back() < 2.0 * kPi))
    throw KwlError("circle map: source angles must lie in [0, 2 pi)");
  if (!(dst.back() - dst.front() < 2.0 * kPi))
    throw KwlError("circle map: target angles wrap past one full turn");
}

double CircleHomeoSample::target_angle(double theta) const {
  const double two_pi = 2.0 * kPi;
  double t = std::fmod(theta - src.front(), two_pi);
  if (t < 0) t += two_pi;
  t += src.front();
  // t in [src.front(), src.front() + 2 pi); wrap the final segment.
  size_t k = std::upper_bound(src.begin(), src.end(), t) - src.begin();
  double t0, t1, p0, p1;
  if (k == 0 || k == src.size()) {
    t0 = src.back();
    t1 = src.front() + two_pi;
    p0 = dst.back();
    p1 = dst.front() + two_pi;
    if (t < t0) t += two_pi;
  } else {
    t0 = src[k - 1];
    t1 = src[k];
    p0 = dst[k - 1];
    p1 = dst[k];
  }
  const double w = (t1 > t0) ? (t - t0) / (t1 - t0) : 0.0;
  return p0 + w * (p1 - p0);
}

Cplx CircleHomeoSample::boundary(double theta) const {
  const double phi = target_angle(theta);
  return R * Cplx(std::cos(phi), std::sin(phi));
}

Cplx central_extension(const CircleHomeoSample& f, Cplx z) {
  const double az = std::abs(z);
  if (az > f.r * (1.0 + 1e-12)) throw KwlError("central_extension: |z| > r");
  if (az == 0) return Cplx(0, 0);
  const double theta = std::arg(z);
  return (az / f.r) * f.boundary(theta);
}

void cap_frame(const Vec3& n, Vec3& e1, Vec3& e2) {
  int k = 0;
  double best = std::abs(n.x());
  if (std::abs(n.y()) < best) {
    k = 1;
    best = std::abs(n.y());
  }
  if (std::abs(n.z()) < best) k = 2;
  Vec3 axis = Vec3::Zero();
  axis[k] = 1.0;
  e1 = axis.cross(n).normalized();
  e2 = n.cross(e1);
}

SpherePoint cap_boundary_point(const SphericalCap& cap, double angle) {
  Vec3 e1, e2;
  cap_frame(cap.center.u, e1, e2);
  const Vec3 u = std::cos(cap.radius) * cap.center.u +
                 std::sin(cap.radius) * (std::cos(angle) * e1 + std::sin(angle) * e2);
  return SpherePoint{u.normalized()};
}

Vec3 cap_flatten(const SphericalCap& cap, const SpherePoint& w) {
  const Vec3& n = cap.center.u;
  const double t = (1.0 + std::cos(cap.radius)) / (1.0 + w.u.dot(n));
  return -n + t * (w.u + n);
}

SpherePoint cap_inflate(const SphericalCap& cap, const Vec3& x) {
  const Vec3& n = cap.center.u;
  const Vec3 d = x + n;
  const double t = 2.0 * n.dot(d) / d.squaredNorm();
  return SpherePoint{(-n + t * d).normalized()};
}

SpherePoint spherical_central_extension(const CapBoundaryMap& fmap,
                                        const SpherePoint& x) {
  if (fmap.src.radius > kPi / 2.0 + 1e-12 || fmap.dst.radius > kPi / 2.0 + 1e-12)
    throw KwlError("spherical central extension needs cap radii <= pi/2");
  const Vec3& n = fmap.src.center.u;
  if (x.u.dot(n) < std::cos(fmap.src.radius) - 1e-9)
    throw KwlError("spherical central extension: point outside the source cap");
  Vec3 e1, e2;
  cap_frame(n, e1, e2);
  const Vec3 flat = cap_flatten(fmap.src, x);
  const Vec3 rel = flat - std::cos(fmap.src.radius) * n;
  const Cplx zeta(rel.dot(e1), rel.dot(e2));
  const Cplx mapped = central_extension(fmap.f, zeta);

  Vec3 d1, d2;
  cap_frame(fmap.dst.center.u, d1, d2);
  const Vec3 flat_dst = std::cos(fmap.dst.radius) * fmap.dst.center.u +
                        mapped.real() * d1 + mapped.imag() * d2;
  return cap_inflate(fmap.dst, flat_dst);
}

double modulus_of_continuity(std::span<const DistancePair> pairs, double delta) {
  if (pairs.empty()) throw KwlError("modulus_of_continuity: empty sample");
  double sup = 0;
  for (const auto& p : pairs)
    if (p.source <= delta) sup = std::max(sup, p.target);
  return sup;
}

double sampling_floor(std::span<const DistancePair> pairs) {
  double floor = std::numeric_limits<double>::infinity();
  for (const auto& p : pairs)
    if (p.source > 0) floor = std::min(floor, p.source);
  return floor;
}

}  // namespace kwl
