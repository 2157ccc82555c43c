#include "vlmcast/geopotential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vlmcast/errors.hpp"

namespace vlmcast {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCfExtraLevels = 24;
constexpr int kSeriesMaxTerms = 20000;

/// Gauss series sum_k (a)_k (b)_k / ((c)_k k!) y^k for 0 <= y < 1. All terms
/// are positive here (Euler-transformed arguments), so no cancellation.
double gauss_series(double a, double b, double c, double y) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    term *= y * (a + k) * (b + k) / ((c + k) * (k + 1.0));
    sum += term;
    if (term <= 1e-17 * sum) return sum;
  }
  throw ConvergenceError("q_ratio: hypergeometric series stalled", sum,
                         kSeriesMaxTerms);
}

/// log of 2F1(A, B; C; -1/t^2) via the Euler transform
/// (1-x)^{-A} 2F1(A, C-B; C; y) with y = 1/(1+t^2).
double log_hyp_f(double A, double B, double C, double t) {
  const double y = 1.0 / (1.0 + t * t);
  const double log1mx = std::log1p(1.0 / (t * t)); // ln(1 - x), x = -1/t^2
  return -A * log1mx + std::log(gauss_series(A, C - B, C, y));
}

/// d/dx log 2F1(A, B; C; x) at x = -1/t^2, via the same transform.
double dlog_hyp_f(double A, double B, double C, double t) {
  const double y = 1.0 / (1.0 + t * t);
  const double one_minus_x = 1.0 + 1.0 / (t * t);
  const double S = gauss_series(A, C - B, C, y);
  const double Sp = (A * (C - B) / C) * gauss_series(A + 1.0, C - B + 1.0, C + 1.0, y);
  return A / one_minus_x - (Sp / S) / (one_minus_x * one_minus_x);
}

struct HypParams {
  double A, B, C;
};

HypParams hyp_params(int n, int m) {
  return {(n + m + 2) / 2.0, (n + m + 1) / 2.0, n + 1.5};
}

/// ln of the sectoral ratio q_mm(t_u)/q_mm(t_b) from the closed
/// hypergeometric representation of Q^m_m.
double log_sectoral_ratio(int m, double tu, double tb) {
  const auto hp = hyp_params(m, m);
  return (2.0 * m + 1.0) * (std::log(tb) - std::log(tu)) +
         0.5 * m * (std::log1p(tu * tu) - std::log1p(tb * tb)) +
         log_hyp_f(hp.A, hp.B, hp.C, tu) - log_hyp_f(hp.A, hp.B, hp.C, tb);
}

/// Downward continued fraction for s_n = q_nm / q_(n-1)m at fixed m:
/// s_n = (n+m) / ((2n+1) t + (n-m+1) s_(n+1)). Fills s[n] for
/// n = m+1 .. n_max.
void cf_chain(int n_max, int m, double t, std::vector<double>& s) {
  s.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  double next = 0.0;
  for (int n = n_max + kCfExtraLevels; n > m; --n) {
    const double cur = (n + m) / ((2.0 * n + 1.0) * t + (n - m + 1.0) * next);
    if (n <= n_max) s[static_cast<std::size_t>(n)] = cur;
    next = cur;
  }
}

/// d/du of ln q_nm(u/E), scaled to u (not t).
double dlog_ratio_du(int n, int m, double u, double E) {
  const double t = u / E;
  const auto hp = hyp_params(n, m);
  const double g = -(n + m + 1.0) / t + m * t / (1.0 + t * t) +
                   dlog_hyp_f(hp.A, hp.B, hp.C, t) * (2.0 / (t * t * t));
  return g / E;
}

void check_args(double u, double b, double E) {
  if (!(E > 0.0) || !(b > 0.0))
    throw std::domain_error("q_ratio: b and E must be positive");
  if (u < b)
    throw std::domain_error("q_ratio: u below the reference surface");
}

} // namespace

double q_ratio(int n, int m, double u, double b, double E) {
  if (n < 0 || m < 0 || m > n)
    throw std::domain_error("q_ratio: need 0 <= m <= n");
  check_args(u, b, E);
  if (u == b) return 1.0;

  const double tu = u / E;
  const double tb = b / E;
  double log_ratio = log_sectoral_ratio(m, tu, tb);
  if (n > m) {
    std::vector<double> su, sb;
    cf_chain(n, m, tu, su);
    cf_chain(n, m, tb, sb);
    for (int j = m + 1; j <= n; ++j)
      log_ratio += std::log(su[static_cast<std::size_t>(j)]) -
                   std::log(sb[static_cast<std::size_t>(j)]);
  }
  return std::exp(log_ratio);
}

RadialRatioTable build_radial_ratios(int max_degree, double u, double b,
                                     double E, bool with_derivative) {
  check_args(u, b, E);
  RadialRatioTable tab;
  tab.max_degree = max_degree;
  tab.ratio.assign(nm_count(max_degree), 1.0);
  if (with_derivative) tab.dratio_du.assign(nm_count(max_degree), 0.0);

  const bool on_surface = (u == b);
  const double tu = u / E;
  const double tb = b / E;

  std::vector<double> su, sb;
  for (int m = 0; m <= max_degree; ++m) {
    double log_ratio = on_surface ? 0.0 : log_sectoral_ratio(m, tu, tb);
    if (!on_surface && m < max_degree) {
      cf_chain(max_degree, m, tu, su);
      cf_chain(max_degree, m, tb, sb);
    }
    for (int n = m; n <= max_degree; ++n) {
      if (!on_surface && n > m)
        log_ratio += std::log(su[static_cast<std::size_t>(n)]) -
                     std::log(sb[static_cast<std::size_t>(n)]);
      tab.ratio[nm_index(n, m)] = on_surface ? 1.0 : std::exp(log_ratio);
      if (with_derivative)
        tab.dratio_du[nm_index(n, m)] =
            tab.ratio[nm_index(n, m)] * dlog_ratio_du(n, m, u, E);
    }
  }
  return tab;
}

GeopotentialModel::GeopotentialModel(int max_degree,
                                     const std::vector<GfcRecord>& records,
                                     double gm, double ref_radius,
                                     EllipsoidParams ell)
    : max_degree_(max_degree), gm_(gm), ref_radius_(ref_radius), ell_(ell) {
  if (max_degree < 0) throw std::domain_error("GeopotentialModel: negative degree");
  if (!(gm > 0.0)) throw std::domain_error("GeopotentialModel: GM must be positive");
  c_.assign(nm_count(max_degree), 0.0);
  s_.assign(nm_count(max_degree), 0.0);
  std::vector<bool> seen(nm_count(max_degree), false);
  for (const auto& r : records) {
    if (r.m < 0 || r.m > r.n)
      throw FormatError("GeopotentialModel: record with m > n or m < 0");
    if (r.n > max_degree) continue;
    const auto idx = nm_index(r.n, r.m);
    if (seen[idx]) throw FormatError("GeopotentialModel: duplicate (n,m) record");
    seen[idx] = true;
    c_[idx] = r.c;
    s_[idx] = r.s;
    if (r.n == 0 && r.m == 0) has_degree0_ = true;
  }
  for (bool b : seen)
    if (!b) ++missing_filled_;
}

namespace {

struct SynthesisSums {
  double value = 0.0;
  double dphi = 0.0;
  double dlambda = 0.0;
  double du = 0.0;
};

/// u tolerance: confocal u of an on-surface point carries roundoff at the
/// centimetre level, so points marginally below b are clamped to b.
double clamp_u(double u, double b) {
  if (u >= b) return u;
  if (u >= b * (1.0 - 1e-8)) return b;
  throw std::domain_error("geopotential: evaluation below the reference ellipsoid");
}

SynthesisSums synthesize(const GeopotentialModel& model, double phi,
                         double lambda, double u, int from_degree,
                         bool want_du) {
  const int nmax = model.max_degree();
  const auto& ell = model.ellipsoid();
  const double b = ell.b();
  const double E = ell.linear_eccentricity();
  const double uu = clamp_u(u, b);

  const LegendreTable leg = legendre_p_normalized(nmax, std::sin(phi));
  const RadialRatioTable rad = build_radial_ratios(nmax, uu, b, E, want_du);

  SynthesisSums out;
  for (int n = from_degree; n <= nmax; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto idx = nm_index(n, m);
      const double cnm = model.c(n, m);
      const double snm = model.s(n, m);
      if (cnm == 0.0 && snm == 0.0) continue;
      const double cml = std::cos(m * lambda);
      const double sml = std::sin(m * lambda);
      const double trig = cnm * cml + snm * sml;
      const double dtrig = m * (-cnm * sml + snm * cml);
      const double r = rad.ratio[idx];
      out.value += r * trig * leg.p[idx];
      out.dphi += r * trig * leg.dp[idx];
      out.dlambda += r * dtrig * leg.p[idx];
      if (want_du) out.du += rad.dratio_du[idx] * trig * leg.p[idx];
    }
  }
  const double scale = model.gm() / model.ref_radius();
  out.value *= scale;
  out.dphi *= scale;
  out.dlambda *= scale;
  out.du *= scale;
  return out;
}

/// Ellipsoidal-coordinate scale factor for the u direction.
double u_scale_factor(double u, double phi, double E) {
  const double s = std::sin(phi);
  return std::sqrt((u * u + E * E * s * s) / (u * u + E * E));
}

} // namespace

double residual_potential_t(const GeopotentialModel& model, double phi,
                            double lambda, double u) {
  if (model.max_degree() < 2)
    throw std::domain_error("residual_potential_t: model degree below 2");
  return synthesize(model, phi, lambda, u, 2, false).value;
}

PotentialResult potential_w_and_gamma0(const GeopotentialModel& model,
                                       double phi, double lambda, double u) {
  if (!model.has_degree0() || model.c(0, 0) == 0.0)
    throw std::domain_error("potential_w_and_gamma0: degree-0 term absent");
  const auto& ell = model.ellipsoid();
  const double uu = clamp_u(u, ell.b());

  const SynthesisSums s = synthesize(model, phi, lambda, uu, 0, true);
  const double r_m = ell.meridian_radius(phi);
  const double r_n = ell.prime_vertical_radius(phi);
  const double hu = u_scale_factor(uu, phi, ell.linear_eccentricity());

  const double g_phi = s.dphi / r_m;
  const double g_lambda = s.dlambda / (r_n * std::cos(phi));
  const double g_u = s.du / hu;

  PotentialResult out;
  out.w = s.value;
  out.ctx.gamma0 = std::sqrt(g_phi * g_phi + g_lambda * g_lambda + g_u * g_u);
  out.ctx.r_m = r_m;
  out.ctx.r_n = r_n;
  return out;
}

PotentialResult potential_w_and_gamma0_at(const GeopotentialModel& model,
                                          const EcefCoord& p,
                                          bool include_centrifugal,
                                          double omega) {
  const auto& ell = model.ellipsoid();
  const GeodeticCoord g = ecef_to_geodetic(p, ell);
  if (!include_centrifugal)
    return potential_w_and_gamma0(model, g.phi, g.lambda, g.u);

  if (!model.has_degree0() || model.c(0, 0) == 0.0)
    throw std::domain_error("potential_w_and_gamma0: degree-0 term absent");
  const double uu = clamp_u(g.u, ell.b());
  const SynthesisSums s = synthesize(model, g.phi, g.lambda, uu, 0, true);
  const double r_m = ell.meridian_radius(g.phi);
  const double r_n = ell.prime_vertical_radius(g.phi);
  const double hu = u_scale_factor(uu, g.phi, ell.linear_eccentricity());

  // gradient of W in the (north-ish, east, up-ish) axes of the evaluation
  // point, plus the centrifugal gradient omega^2 * rho resolved onto them
  const double rho = std::hypot(p.x, p.y);
  const double cf = omega * omega * rho;
  const double g_phi = s.dphi / r_m - cf * std::sin(g.phi);
  const double g_lambda = s.dlambda / (r_n * std::cos(g.phi));
  const double g_u = s.du / hu + cf * std::cos(g.phi);

  PotentialResult out;
  out.w = s.value + 0.5 * omega * omega * rho * rho;
  out.ctx.gamma0 = std::sqrt(g_phi * g_phi + g_lambda * g_lambda + g_u * g_u);
  out.ctx.r_m = r_m;
  out.ctx.r_n = r_n;
  return out;
}

DeflectionComponents deflections(const GeopotentialModel& model, double phi,
                                 double lambda, double u,
                                 const GravityContext& ctx) {
  if (std::abs(phi) >= 89.0 * kPi / 180.0)
    throw std::domain_error("deflections: latitude too close to the pole");
  if (!(ctx.gamma0 > 0.0))
    throw std::domain_error("deflections: non-positive gamma0");
  if (model.max_degree() < 2)
    throw std::domain_error("deflections: model degree below 2");

  const SynthesisSums s = synthesize(model, phi, lambda, u, 2, false);
  DeflectionComponents d;
  d.xi = s.dphi / (ctx.r_m * ctx.gamma0);
  d.eta = s.dlambda / (ctx.r_n * std::cos(phi) * ctx.gamma0);
  d.delta_a = d.eta * std::tan(phi);
  return d;
}

} // namespace vlmcast
