#include "convprod/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "convprod/errors.hpp"
#include "convprod/fft.hpp"

namespace convprod {

namespace {
constexpr double kPi = std::numbers::pi;
}

Tvir make_gaussian(int n) {
  Grid g(n);
  // 4 * sup sigma; tighter truncation visibly perturbs the spectrum
  const double kappa = 0.40;
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x = g.coord(i);
    if (std::fabs(x) > kappa / 2) continue;
    for (int j = 0; j < n; ++j) {
      const double sigma = 0.08 + 0.02 * std::cos(2.0 * kPi * g.coord(j));
      a[static_cast<std::size_t>(i) * n + j] =
          std::exp(-x * x / (2.0 * sigma * sigma)) /
          (std::sqrt(2.0 * kPi) * sigma);
    }
  }
  return make_tvir(g, std::move(a), kappa, 3);
}

Tvir make_hat(int n) {
  Grid g(n);
  const double kappa = 0.4;  // sup sigma
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x = g.coord(i);
    if (std::fabs(x) > kappa / 2) continue;
    for (int j = 0; j < n; ++j) {
      const double sigma = 0.1 + 0.3 * (1.0 - std::fabs(g.coord(j)));
      const double t = 1.0 - 2.0 * std::fabs(x) / sigma;
      a[static_cast<std::size_t>(i) * n + j] =
          t > 0.0 ? 2.0 / sigma * t : 0.0;
    }
  }
  return make_tvir(g, std::move(a), kappa, 1);
}

Tvir make_piecewise(int n) {
  Grid g(n);
  const double s1 = 0.05, s2 = 0.1;
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x = g.coord(i);
    const double g1 = std::exp(-x * x / (s1 * s1)) / std::sqrt(2.0 * kPi);
    const double g2 = std::exp(-x * x / (s2 * s2)) / std::sqrt(2.0 * kPi);
    for (int j = 0; j < n; ++j) {
      const bool inner = std::fabs(g.coord(j)) <= 0.25;
      a[static_cast<std::size_t>(i) * n + j] = inner ? g1 : g2;
    }
  }
  return make_tvir(g, std::move(a), 1.0);
}

Tvir make_worst_case(int n, int s, double eps, double kappa) {
  if (s < 1) throw precondition_error("make_worst_case: s must be >= 1");
  if (!(eps > 0.0)) throw precondition_error("make_worst_case: eps must be > 0");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw precondition_error("make_worst_case: kappa must lie in (0, 1]");
  Grid g(n);
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  const int kmax = n / 2 - 1;
  std::vector<double> weight(kmax + 1, 0.0);
  for (int k = 1; k <= kmax; ++k) {
    if (kappa == 1.0) {
      weight[k] = 2.0 * std::pow(k, -(s + 0.5 + eps / 2.0));
    } else {
      const double sig =
          kappa / (std::pow(1.0 + static_cast<double>(k) * k, s) *
                   std::pow(k, 1.0 + eps));
      weight[k] = 2.0 * sig / kappa;
    }
  }
  // Row i is the short Fourier series sum_k w_k cos(2 pi k (x/kappa + t_j));
  // synthesize it as one inverse FFT per row.
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) {
    const double x = g.coord(i);
    if (std::fabs(x) > kappa / 2) continue;
    const double off = x / kappa - 0.5;  // t_j = j/n - 1/2
    std::fill(z.begin(), z.end(), std::complex<double>(0.0));
    for (int k = 1; k <= kmax; ++k) {
      const double ang = 2.0 * kPi * k * off;
      z[k] = weight[k] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    fft_inplace(z, true);
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = n * z[j].real();
  }
  return make_tvir(g, std::move(a), kappa, s);
}

Tvir make_pure_conv(const Signal& h, double kappa) {
  const Grid g = h.grid;
  const int n = g.n;
  for (int i = 0; i < n; ++i)
    if (std::fabs(g.coord(i)) > kappa / 2 && h.v[i] != 0.0)
      throw contract_error("make_pure_conv: h not supported in kappa");
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = h.v[i];
  return make_tvir(g, std::move(a), kappa);
}

}  // namespace convprod
