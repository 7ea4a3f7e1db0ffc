#ifndef KWL_GEOM_HPP
#define KWL_GEOM_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kwl {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInteriorGuard = 1e-12;

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Cplx = std::complex<double>;

// Deterministic RNG. All randomness in the library flows through this so
// that a recorded seed reproduces every numeric table bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    // 53-bit mantissa from the raw engine output; avoids the
    // implementation-defined std::uniform_real_distribution.
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  std::uint64_t bits() { return eng_(); }
  int index(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  double normal() {
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }
  Vec3 unit_vec3() {
    Vec3 v(normal(), normal(), normal());
    while (v.norm() < 1e-8) v = Vec3(normal(), normal(), normal());
    return v.normalized();
  }

 private:
  std::mt19937_64 eng_;
};

struct KwlError : std::runtime_error {
  explicit KwlError(const std::string& what) : std::runtime_error(what) {}
};

inline double sq(double x) { return x * x; }

inline double clamp01(double x) { return x < 0 ? 0 : (x > 1 ? 1 : x); }

}  // namespace kwl

#endif
