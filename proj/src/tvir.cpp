#include "convprod/tvir.hpp"

#include <cmath>
#include <string>

#include "convprod/errors.hpp"

namespace convprod {

Signal Tvir::row(int i) const {
  Signal s = zero_signal(grid);
  for (int j = 0; j < grid.n; ++j) s.v[j] = at(i, j);
  return s;
}

Signal Tvir::col(int j) const {
  Signal s = zero_signal(grid);
  for (int i = 0; i < grid.n; ++i) s.v[i] = at(i, j);
  return s;
}

Tvir make_tvir(Grid grid, std::vector<double> values, double kappa,
               std::optional<int> s_hint) {
  const int n = grid.n;
  if (static_cast<int>(values.size()) != n * n)
    throw dimension_error("make_tvir: expected " + std::to_string(n * n) +
                          " values");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw precondition_error("make_tvir: kappa must lie in (0, 1]");

  double amax = 0.0;
  for (double x : values) {
    if (!std::isfinite(x)) throw contract_error("make_tvir: non-finite value");
    amax = std::max(amax, std::fabs(x));
  }
  const double tol = 1e-14 * std::max(1.0, amax);
  for (int i = 0; i < n; ++i) {
    if (std::fabs(grid.coord(i)) <= kappa / 2) continue;
    for (int j = 0; j < n; ++j) {
      double& x = values[static_cast<std::size_t>(i) * n + j];
      if (std::fabs(x) > tol)
        throw contract_error("make_tvir: row " + std::to_string(i) +
                             " violates the kappa support bound");
      x = 0.0;
    }
  }
  return Tvir{grid, std::move(values), kappa, s_hint};
}

KernelMatrix tvir_to_kernel(const Tvir& tvir) {
  const int n = tvir.grid.n;
  KernelMatrix k{tvir.grid, std::vector<double>(tvir.a.size())};
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      k.at(a, j) = tvir.at((a - j + n / 2 + n) % n, j);
  return k;
}

Tvir kernel_to_tvir(const KernelMatrix& kernel, double kappa) {
  const int n = kernel.grid.n;
  std::vector<double> values(kernel.a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      values[static_cast<std::size_t>(i) * n + j] =
          kernel.at((i + j - n / 2 + n) % n, j);
  return make_tvir(kernel.grid, std::move(values), kappa);
}

Signal apply_dense(const Tvir& tvir, const Signal& u) {
  require_same_grid(tvir.grid, u.grid, "apply_dense");
  const int n = tvir.grid.n;
  Signal out = zero_signal(tvir.grid);
  // Walk T row-wise: T[i][j] contributes to output index (i + j - n/2) mod n.
  for (int i = 0; i < n; ++i) {
    const double* row = &tvir.a[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < n; ++j) {
      int a = i + j - n / 2;
      a = a < 0 ? a + n : (a >= n ? a - n : a);
      out.v[a] += row[j] * u.v[j];
    }
  }
  for (int a = 0; a < n; ++a) out.v[a] /= n;
  return out;
}

double hs_norm(const Tvir& tvir) {
  double s = 0.0;
  for (double x : tvir.a) s += x * x;
  return std::sqrt(s) / tvir.grid.n;
}

double hs_distance(const Tvir& lhs, const Tvir& rhs) {
  require_same_grid(lhs.grid, rhs.grid, "hs_distance");
  double s = 0.0;
  for (std::size_t t = 0; t < lhs.a.size(); ++t) {
    double d = lhs.a[t] - rhs.a[t];
    s += d * d;
  }
  return std::sqrt(s) / lhs.grid.n;
}

}  // namespace convprod
