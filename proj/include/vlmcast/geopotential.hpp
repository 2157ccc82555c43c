#ifndef VLMCAST_GEOPOTENTIAL_HPP
#define VLMCAST_GEOPOTENTIAL_HPP

#include <cstddef>
#include <vector>

#include "vlmcast/geodesy.hpp"
#include "vlmcast/legendre.hpp"

namespace vlmcast {

/// One gravity-field coefficient pair.
struct GfcRecord {
  int n = 0;
  int m = 0;
  double c = 0.0;
  double s = 0.0;
};

/// Dense, fully normalized coefficient table with the scale constants of the
/// source file. Immutable after construction.
class GeopotentialModel {
public:
  GeopotentialModel() = default;

  /// Builds the dense triangle up to max_degree; entries absent from the
  /// record list are zero and counted. Throws FormatError on duplicate or
  /// invalid (n,m) pairs.
  GeopotentialModel(int max_degree, const std::vector<GfcRecord>& records,
                    double gm, double ref_radius,
                    EllipsoidParams ell = EllipsoidParams::wgs84());

  int max_degree() const noexcept { return max_degree_; }
  double gm() const noexcept { return gm_; }
  double ref_radius() const noexcept { return ref_radius_; }
  const EllipsoidParams& ellipsoid() const noexcept { return ell_; }
  std::size_t missing_filled() const noexcept { return missing_filled_; }
  bool has_degree0() const noexcept { return has_degree0_; }

  double c(int n, int m) const { return c_[nm_index(n, m)]; }
  double s(int n, int m) const { return s_[nm_index(n, m)]; }

private:
  int max_degree_ = 0;
  std::vector<double> c_;
  std::vector<double> s_;
  double gm_ = 0.0;
  double ref_radius_ = 0.0;
  EllipsoidParams ell_;
  std::size_t missing_filled_ = 0;
  bool has_degree0_ = false;
};

/// Scaling context for the vertical deflections at an evaluation point.
struct GravityContext {
  double gamma0 = 0.0; ///< m/s^2
  double r_m = 0.0;    ///< meridian radius of curvature [m]
  double r_n = 0.0;    ///< prime-vertical radius of curvature [m]
};

struct PotentialResult {
  double w = 0.0; ///< m^2/s^2
  GravityContext ctx;
};

/// Ratio of second-kind Legendre functions of imaginary argument,
/// Q_nm(i u/E) / Q_nm(i b/E), computed by a downward continued fraction over
/// the degree with a hypergeometric sectoral seed; the ratio is assembled in
/// log space. Requires u >= b > 0 and E > 0; exactly 1 at u = b.
double q_ratio(int n, int m, double u, double b, double E);

/// Radial factors Q_nm(iu/E)/Q_nm(ib/E) for the whole (n,m) triangle, with
/// optional d/du columns for the gradient of the potential.
struct RadialRatioTable {
  int max_degree = 0;
  std::vector<double> ratio;     ///< nm_index layout
  std::vector<double> dratio_du; ///< empty unless requested
};

RadialRatioTable build_radial_ratios(int max_degree, double u, double b,
                                     double E, bool with_derivative);

/// Residual potential T(phi, lambda, u): the degree-2..max sum of the model,
/// scaled by GM/ref_radius. Throws std::domain_error for max_degree < 2 or
/// u below the ellipsoid surface.
double residual_potential_t(const GeopotentialModel& model, double phi,
                            double lambda, double u);

/// Potential W summed from degree 0 plus gamma0 = |grad W| with the
/// ellipsoidal-coordinate scale factors; R_M and R_N attached. Requires the
/// degree-0 term to be present.
PotentialResult potential_w_and_gamma0(const GeopotentialModel& model,
                                       double phi, double lambda, double u);

/// Variant evaluated at an ECEF point; optionally adds the centrifugal
/// term 1/2 w^2 (X^2+Y^2) to the potential before taking the gradient.
PotentialResult potential_w_and_gamma0_at(const GeopotentialModel& model,
                                          const EcefCoord& p,
                                          bool include_centrifugal,
                                          double omega = 7.292115e-5);

/// Vertical deflections from the analytic partials of T:
/// xi = T_phi / (R_M gamma0), eta = T_lambda / (R_N cos(phi) gamma0),
/// delta_a = eta tan(phi). Requires |phi| < 89 deg.
DeflectionComponents deflections(const GeopotentialModel& model, double phi,
                                 double lambda, double u,
                                 const GravityContext& ctx);

} // namespace vlmcast

#endif
