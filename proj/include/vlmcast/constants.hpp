#ifndef VLMCAST_CONSTANTS_HPP
#define VLMCAST_CONSTANTS_HPP

namespace vlmcast {

/// Length of the sidereal year in (solar) days. All internal epochs are
/// expressed in decimal sidereal years.
inline constexpr double kDaysPerSiderealYear = 365.25636;

/// Length of the Julian year in days; station files carry decimal Julian
/// years, converted on ingest.
inline constexpr double kDaysPerJulianYear = 365.25;

/// One day expressed in sidereal years; the nominal step of daily series.
inline constexpr double kDailyStep = 1.0 / kDaysPerSiderealYear;

/// WGS84 semi-major axis [m].
inline constexpr double kWgs84A = 6378137.0;

/// WGS84 first eccentricity squared.
inline constexpr double kWgs84E2 = 6.69437999014e-3;

/// Sanity floor for the ECEF norm of a ground station [m].
inline constexpr double kMinStationRadius = 6.0e6;

inline constexpr double julian_to_sidereal(double t_julian_years) {
  return t_julian_years * (kDaysPerJulianYear / kDaysPerSiderealYear);
}

inline constexpr double sidereal_to_julian(double t_sidereal_years) {
  return t_sidereal_years * (kDaysPerSiderealYear / kDaysPerJulianYear);
}

} // namespace vlmcast

#endif
