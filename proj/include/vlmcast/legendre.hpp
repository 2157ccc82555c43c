#ifndef VLMCAST_LEGENDRE_HPP
#define VLMCAST_LEGENDRE_HPP

#include <cstddef>
#include <vector>

namespace vlmcast {

/// Triangular (n,m) table, n = 0..max_degree, m = 0..n.
inline std::size_t nm_index(int n, int m) {
  return static_cast<std::size_t>(n) * (n + 1) / 2 + m;
}

inline std::size_t nm_count(int max_degree) {
  return static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2;
}

/// Fully normalized associated Legendre values at x = sin(phi) together with
/// their derivatives with respect to phi (not x). The normalization is the
/// geodetic one: P00 = 1, P10 = sqrt(3) sin(phi), sum_m Pnm^2 = 2n+1.
struct LegendreTable {
  int max_degree = 0;
  std::vector<double> p;   ///< values, nm_index layout
  std::vector<double> dp;  ///< d/dphi, nm_index layout

  double value(int n, int m) const { return p[nm_index(n, m)]; }
  double deriv(int n, int m) const { return dp[nm_index(n, m)]; }
};

/// Column recursion over m with the phi-derivative carried alongside.
/// Throws std::domain_error for |x| > 1 or negative degree.
LegendreTable legendre_p_normalized(int max_degree, double x);

} // namespace vlmcast

#endif
