#pragma once

// Test-only oracle: floating-point finite-difference weights on arbitrary
// nodes via the classical recursion, with the c1/c2 factor carried as an
// incremental ratio so the node-difference products never overflow even for
// stencils hundreds of points wide. Independent of the library's exact
// rational paths.

#include <cmath>
#include <cstddef>
#include <vector>

namespace zigzag_test {

/// weights[m][q]: weight of node q for the m-th derivative at x = 0.
inline std::vector<std::vector<double>> fornberg_weights(const std::vector<double>& nodes,
                                                         int max_derivative) {
  const std::size_t n = nodes.size();
  const std::size_t md = static_cast<std::size_t>(max_derivative);
  std::vector<std::vector<std::vector<double>>> d(
      md + 1, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  d[0][0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    // ratio = c1/c2 = prod_v (x_{i-1} - x_v) / prod_v (x_i - x_v), v < i
    double ratio = 1.0;
    for (std::size_t v = 0; v + 1 < i; ++v) ratio *= (nodes[i - 1] - nodes[v]) / (nodes[i] - nodes[v]);
    ratio /= (nodes[i] - nodes[i - 1]);
    for (std::size_t v = 0; v < i; ++v) {
      const double c3 = nodes[i] - nodes[v];
      for (std::size_t m = 0; m <= std::min(i, md); ++m) {
        double val = (0.0 - nodes[i]) * d[m][i - 1][v];  // evaluation point x = 0
        if (m > 0) val += static_cast<double>(m) * d[m - 1][i - 1][v];
        d[m][i][v] = -val / c3;
      }
    }
    for (std::size_t m = 0; m <= std::min(i, md); ++m) {
      double val = -nodes[i - 1] * d[m][i - 1][i - 1];
      if (m > 0) val += static_cast<double>(m) * d[m - 1][i - 1][i - 1];
      d[m][i][i] = ratio * val;
    }
  }
  std::vector<std::vector<double>> w(md + 1, std::vector<double>(n, 0.0));
  for (std::size_t m = 0; m <= md; ++m)
    for (std::size_t q = 0; q < n; ++q) w[m][q] = d[m][n - 1][q];
  return w;
}

}  // namespace zigzag_test
