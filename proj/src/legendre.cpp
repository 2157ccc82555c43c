#include "vlmcast/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace vlmcast {

LegendreTable legendre_p_normalized(int max_degree, double x) {
  if (max_degree < 0)
    throw std::domain_error("legendre_p_normalized: negative degree");
  if (!(std::abs(x) <= 1.0))
    throw std::domain_error("legendre_p_normalized: |x| > 1");

  const double s = x;                      // sin(phi)
  const double c = std::sqrt(1.0 - x * x); // cos(phi), phi in (-pi/2, pi/2)

  LegendreTable t;
  t.max_degree = max_degree;
  t.p.assign(nm_count(max_degree), 0.0);
  t.dp.assign(nm_count(max_degree), 0.0);

  t.p[nm_index(0, 0)] = 1.0;
  t.dp[nm_index(0, 0)] = 0.0;

  // sectoral chain: Pmm = sqrt((2m+1)/(2m)) cos(phi) P(m-1,m-1)
  for (int m = 1; m <= max_degree; ++m) {
    const double f = std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    const double pm1 = t.p[nm_index(m - 1, m - 1)];
    const double dpm1 = t.dp[nm_index(m - 1, m - 1)];
    t.p[nm_index(m, m)] = f * c * pm1;
    t.dp[nm_index(m, m)] = f * (-s * pm1 + c * dpm1);
  }

  // first off-diagonal: P(m+1,m) = sqrt(2m+3) sin(phi) Pmm
  for (int m = 0; m + 1 <= max_degree; ++m) {
    const double f = std::sqrt(2.0 * m + 3.0);
    const double pmm = t.p[nm_index(m, m)];
    const double dpmm = t.dp[nm_index(m, m)];
    t.p[nm_index(m + 1, m)] = f * s * pmm;
    t.dp[nm_index(m + 1, m)] = f * (c * pmm + s * dpmm);
  }

  for (int m = 0; m <= max_degree; ++m) {
    for (int n = m + 2; n <= max_degree; ++n) {
      const double alpha = std::sqrt((2.0 * n - 1.0) * (2.0 * n + 1.0) /
                                     ((n - m) * static_cast<double>(n + m)));
      const double beta =
          std::sqrt((2.0 * n + 1.0) * (n + m - 1.0) * (n - m - 1.0) /
                    ((n - m) * static_cast<double>(n + m) * (2.0 * n - 3.0)));
      const double p1 = t.p[nm_index(n - 1, m)];
      const double dp1 = t.dp[nm_index(n - 1, m)];
      const double p2 = t.p[nm_index(n - 2, m)];
      const double dp2 = t.dp[nm_index(n - 2, m)];
      t.p[nm_index(n, m)] = alpha * s * p1 - beta * p2;
      t.dp[nm_index(n, m)] = alpha * (c * p1 + s * dp1) - beta * dp2;
    }
  }
  return t;
}

} // namespace vlmcast
