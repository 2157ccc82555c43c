#ifndef VLMCAST_GEODESY_HPP
#define VLMCAST_GEODESY_HPP

#include <cstddef>

#include <Eigen/Dense>

#include "vlmcast/constants.hpp"
#include "vlmcast/series.hpp"

namespace vlmcast {

/// Reference ellipsoid, defined by semi-major axis and first eccentricity
/// squared; b and the linear eccentricity E are derived.
struct EllipsoidParams {
  double a = kWgs84A;
  double e2 = kWgs84E2;

  double b() const;              ///< semi-minor axis, a*sqrt(1-e2)
  double linear_eccentricity() const; ///< E = a*e

  /// Prime-vertical radius of curvature R_N at latitude phi.
  double prime_vertical_radius(double phi) const;
  /// Meridian radius of curvature R_M at latitude phi.
  double meridian_radius(double phi) const;

  static EllipsoidParams wgs84() { return {}; }
};

/// geodetic latitude/longitude/height plus the confocal-ellipsoid third
/// coordinate u (semi-minor axis of the confocal ellipsoid through the point).
struct GeodeticCoord {
  double phi = 0.0;    ///< radians, (-pi/2, pi/2)
  double lambda = 0.0; ///< radians, (-pi, pi]
  double h = 0.0;      ///< meters above the ellipsoid
  double u = 0.0;      ///< meters, confocal third coordinate
  std::size_t iterations = 0; ///< fixed-point iterations used
};

/// Tolerance and cap for the phi/h fixed-point iteration.
struct ConversionSettings {
  double epsilon = 1e-12;       ///< radians
  std::size_t max_iterations = 20;
};

/// North-south (xi) and east-west (eta) deflections of the vertical plus the
/// azimuth correction delta_a = eta * tan(phi), all in radians.
struct DeflectionComponents {
  double xi = 0.0;
  double eta = 0.0;
  double delta_a = 0.0;
};

using RotationMatrix = Eigen::Matrix3d;

/// Elementary rotation about axis 1, 2 or 3 with the entry layout used by
/// the local-frame transforms. Throws std::domain_error when theta is
/// outside the admissible range (axis 2: [-pi,pi]; axes 1,3: [-2pi,2pi]).
RotationMatrix make_rotation(int axis, double theta);

/// Reflection of the second coordinate axis, diag(1,-1,1).
RotationMatrix make_reflection_s2();

/// ECEF -> geodetic by the fixed-point iteration on phi and h; lambda from
/// atan2. Points within 1 m of the rotation axis take the closed-form polar
/// branch. Throws ConvergenceError when the tolerance is not reached.
GeodeticCoord ecef_to_geodetic(const EcefCoord& p, const EllipsoidParams& ell,
                               const ConversionSettings& cfg = {});

/// Confocal third coordinate u of a point, from the quadratic in u^2.
double confocal_u(const EcefCoord& p, const EllipsoidParams& ell);

/// The local-geodetic rotation S2 * R2(phi - pi/2) * R3(lambda - pi).
RotationMatrix local_geodetic_rotation(double phi, double lambda);

/// Apply the local-geodetic transform to an absolute ECEF vector.
LocalCoord ecef_to_local_geodetic(const EcefCoord& p, double phi, double lambda);

/// Local geodetic -> local astronomical via R1(-eta) R2(xi) R3(-delta_a).
/// Throws FrameError if p is not in the local geodetic frame.
LocalCoord local_geodetic_to_astronomical(const LocalCoord& p,
                                          const DeflectionComponents& d);

/// Forward map geodetic -> ECEF (test and fixture support).
EcefCoord geodetic_to_ecef(double phi, double lambda, double h,
                           const EllipsoidParams& ell);

} // namespace vlmcast

#endif
