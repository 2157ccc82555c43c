#include "vlmcast/geodesy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vlmcast/errors.hpp"

namespace vlmcast {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kAxisGuard = 1.0; // meters from the rotation axis
} // namespace

double EllipsoidParams::b() const { return a * std::sqrt(1.0 - e2); }

double EllipsoidParams::linear_eccentricity() const {
  return a * std::sqrt(e2);
}

double EllipsoidParams::prime_vertical_radius(double phi) const {
  const double s = std::sin(phi);
  return a / std::sqrt(1.0 - e2 * s * s);
}

double EllipsoidParams::meridian_radius(double phi) const {
  const double s = std::sin(phi);
  const double w2 = 1.0 - e2 * s * s;
  return a * (1.0 - e2) / (w2 * std::sqrt(w2));
}

RotationMatrix make_rotation(int axis, double theta) {
  if (axis < 1 || axis > 3)
    throw std::domain_error("make_rotation: axis must be 1, 2 or 3");
  const double lim = (axis == 2) ? kPi : 2.0 * kPi;
  if (!(theta >= -lim && theta <= lim))
    throw std::domain_error("make_rotation: angle outside admissible range");

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  RotationMatrix r = RotationMatrix::Identity();
  switch (axis) {
  case 1:
    r << 1, 0, 0,
         0, c, s,
         0, -s, c;
    break;
  case 2:
    r << c, 0, -s,
         0, 1, 0,
         s, 0, c;
    break;
  default:
    r << c, s, 0,
         -s, c, 0,
         0, 0, 1;
    break;
  }
  return r;
}

RotationMatrix make_reflection_s2() {
  RotationMatrix s = RotationMatrix::Identity();
  s(1, 1) = -1.0;
  return s;
}

double confocal_u(const EcefCoord& p, const EllipsoidParams& ell) {
  const double E = ell.linear_eccentricity();
  const double r2 = p.x * p.x + p.y * p.y + p.z * p.z;
  const double d = r2 - E * E;
  // u^4 - u^2 (r^2 - E^2) - E^2 Z^2 = 0, positive root
  const double u2 = 0.5 * (d + std::sqrt(d * d + 4.0 * E * E * p.z * p.z));
  return std::sqrt(u2);
}

GeodeticCoord ecef_to_geodetic(const EcefCoord& p, const EllipsoidParams& ell,
                               const ConversionSettings& cfg) {
  if (cfg.epsilon <= 0.0 || cfg.max_iterations < 1)
    throw std::domain_error("ecef_to_geodetic: invalid settings");

  GeodeticCoord g;
  g.u = confocal_u(p, ell);

  const double P = std::hypot(p.x, p.y);
  if (P < kAxisGuard) {
    // polar branch: the iteration divides by cos(phi)
    g.phi = std::copysign(kPi / 2.0, p.z);
    g.lambda = 0.0;
    g.h = std::abs(p.z) - ell.b();
    g.iterations = 0;
    return g;
  }

  g.lambda = std::atan2(p.y, p.x);

  const double r = std::sqrt(P * P + p.z * p.z);
  double h = r - ell.a * std::pow(1.0 - ell.e2, 0.25);
  double rn = ell.a;
  double phi = std::atan((p.z / P) / (1.0 - ell.e2 * rn / (rn + h)));

  for (std::size_t i = 1; i <= cfg.max_iterations; ++i) {
    rn = ell.prime_vertical_radius(phi);
    h = P / std::cos(phi) - rn;
    const double phi_next =
        std::atan((p.z / P) / (1.0 - ell.e2 * rn / (rn + h)));
    const double delta = std::abs(phi_next - phi);
    phi = phi_next;
    if (delta < cfg.epsilon) {
      g.phi = phi;
      g.h = h;
      g.iterations = i;
      return g;
    }
  }
  throw ConvergenceError("ecef_to_geodetic: no convergence", phi,
                         cfg.max_iterations);
}

RotationMatrix local_geodetic_rotation(double phi, double lambda) {
  return make_reflection_s2() * make_rotation(2, phi - kPi / 2.0) *
         make_rotation(3, lambda - kPi);
}

LocalCoord ecef_to_local_geodetic(const EcefCoord& p, double phi,
                                  double lambda) {
  const Eigen::Vector3d v =
      local_geodetic_rotation(phi, lambda) * Eigen::Vector3d(p.x, p.y, p.z);
  return LocalCoord{v.x(), v.y(), v.z(), FrameTag::LocalGeodetic};
}

LocalCoord local_geodetic_to_astronomical(const LocalCoord& p,
                                          const DeflectionComponents& d) {
  if (p.frame != FrameTag::LocalGeodetic)
    throw FrameError("local_geodetic_to_astronomical: input not in the "
                     "local geodetic frame");
  const RotationMatrix m = make_rotation(1, -d.eta) * make_rotation(2, d.xi) *
                           make_rotation(3, -d.delta_a);
  const Eigen::Vector3d v = m * Eigen::Vector3d(p.e1, p.e2, p.e3);
  return LocalCoord{v.x(), v.y(), v.z(), FrameTag::LocalAstronomical};
}

EcefCoord geodetic_to_ecef(double phi, double lambda, double h,
                           const EllipsoidParams& ell) {
  const double n = ell.prime_vertical_radius(phi);
  const double cp = std::cos(phi);
  return EcefCoord{(n + h) * cp * std::cos(lambda),
                   (n + h) * cp * std::sin(lambda),
                   (n * (1.0 - ell.e2) + h) * std::sin(phi)};
}

} // namespace vlmcast
