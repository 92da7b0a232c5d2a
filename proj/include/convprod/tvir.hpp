#ifndef CONVPROD_TVIR_HPP
#define CONVPROD_TVIR_HPP

#include <optional>
#include <vector>

#include "convprod/grid.hpp"

namespace convprod {

// Time-varying impulse response samples T(t_i, t_j), row i = offset x,
// column j = position y. Rows with |t_i| > kappa/2 are identically zero;
// construction verifies this (tolerance 1e-14 relative) and then zeroes the
// out-of-support rows exactly so support accounting stays exact.
struct Tvir {
  Grid grid;
  std::vector<double> a;  // row-major n*n
  double kappa = 1.0;
  std::optional<int> s_hint;

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * grid.n + j]; }
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * grid.n + j]; }
  Signal row(int i) const;
  Signal col(int j) const;
};

Tvir make_tvir(Grid grid, std::vector<double> values, double kappa,
               std::optional<int> s_hint = std::nullopt);

// Kernel samples K(t_a, t_j) with K(x, y) = T(x - y, y).
struct KernelMatrix {
  Grid grid;
  std::vector<double> a;  // row-major n*n

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * grid.n + j]; }
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * grid.n + j]; }
};

// K[a][j] = T[(a - j + n/2) mod n][j]; exact relabeling, round trips exactly.
KernelMatrix tvir_to_kernel(const Tvir& tvir);
Tvir kernel_to_tvir(const KernelMatrix& kernel, double kappa);

// (Hu)[a] = (1/n) sum_j K[a][j] u[j]; the ground-truth operator application.
Signal apply_dense(const Tvir& tvir, const Signal& u);

// Hilbert-Schmidt norm of the operator: Frobenius(T)/n under 1/n quadrature.
double hs_norm(const Tvir& tvir);
double hs_distance(const Tvir& lhs, const Tvir& rhs);

}  // namespace convprod

#endif
