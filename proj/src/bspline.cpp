#include "convprod/bspline.hpp"

#include <cmath>
#include <string>

#include "convprod/errors.hpp"
#include "convprod/fft.hpp"

namespace convprod {

Signal BSplineSpace::basis_signal(int k) const {
  Signal s = zero_signal(grid);
  for (int i = 0; i < grid.n; ++i) s.v[i] = basis(k, i);
  return s;
}

BSplineSpace bspline_space(int alpha, int m, Grid grid) {
  const int n = grid.n;
  if (alpha < 0) throw precondition_error("bspline_space: alpha must be >= 0");
  if (m < alpha + 2)
    throw precondition_error("bspline_space: need m >= alpha + 2 (m=" +
                             std::to_string(m) + ", alpha=" +
                             std::to_string(alpha) + ")");
  if (m > n || n % m != 0)
    throw precondition_error("bspline_space: m must divide n");

  BSplineSpace sp;
  sp.grid = grid;
  sp.alpha = alpha;
  sp.m = m;

  // B_{0,m} with the half-open convention: 1 on [-1/(2m), 1/(2m)).
  std::vector<double> b0(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double t = grid.coord(i);
    if (t >= -0.5 / m && t < 0.5 / m) b0[i] = 1.0;
  }
  // continuous recursion B_a = m * B_0 conv B_{a-1}, quadrature weight 1/n;
  // direct sparse convolution keeps supports and zeros exact
  std::vector<int> b0_idx;
  for (int i = 0; i < n; ++i)
    if (b0[i] != 0.0) b0_idx.push_back(i);
  std::vector<double> cur = b0;
  for (int a = 0; a < alpha; ++a) {
    std::vector<double> next(n, 0.0);
    for (int j = 0; j < n; ++j) {
      if (cur[j] == 0.0) continue;
      const double cj = cur[j] * m / n;
      for (int x : b0_idx) next[(x + j - n / 2 + n) % n] += cj;
    }
    cur = std::move(next);
  }
  sp.base = std::move(cur);
  sp.base_support = minimal_support(sp.base);

  // circulant Gram: gram[d] = (1/n) <b_0, b_d>, solved in Fourier
  std::vector<std::complex<double>> gam(m, 0.0);
  const int stride = n / m;
  for (int d = 0; d < m; ++d) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += sp.base[i] * sp.base[((i - d * stride) % n + n) % n];
    gam[d] = acc / n;
  }
  fft_inplace(gam, false);
  for (int k = 0; k < m; ++k)
    if (!(gam[k].real() > 1e-13 * gam[0].real()))
      throw contract_error("bspline_space: singular Gram");
  sp.gram_hat = std::move(gam);
  return sp;
}

std::vector<double> bspline_project(const Signal& row,
                                    const BSplineSpace& space) {
  require_same_grid(row.grid, space.grid, "bspline_project");
  const int n = space.grid.n;
  const int m = space.m;
  const int stride = n / m;

  // rhs[k] = (1/n) <b_k, row>, accumulated over the compact base support
  std::vector<std::complex<double>> rhs(m, 0.0);
  const Support& s0 = space.base_support;
  for (int k = 0; k < m; ++k) {
    double acc = 0.0;
    for (int t = 0; t < s0.len; ++t) {
      const int i = (s0.start + t + k * stride) % n;
      acc += space.base[(s0.start + t) % n] * row.v[i];
    }
    rhs[k] = acc / n;
  }
  // solve the circulant system G c = rhs via length-m FFT
  fft_inplace(rhs, false);
  for (int k = 0; k < m; ++k) rhs[k] /= space.gram_hat[k];
  fft_inplace(rhs, true);
  std::vector<double> c(m);
  for (int k = 0; k < m; ++k) c[k] = rhs[k].real();
  return c;
}

}  // namespace convprod
