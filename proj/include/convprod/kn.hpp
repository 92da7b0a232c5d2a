#ifndef CONVPROD_KN_HPP
#define CONVPROD_KN_HPP

#include <complex>
#include <vector>

#include "convprod/tvir.hpp"

namespace convprod {

// Kohn-Nirenberg symbol samples N[i][k] = (1/n) sum_j T[i][j] e^{-2 i pi k t_j}
// for k = -k_max .. k_max (the DFT of row i at frequency k).
struct KnSymbol {
  Grid grid;
  int k_max = 0;
  std::vector<std::complex<double>> values;  // row-major n x (2*k_max+1)

  const std::complex<double>& at(int i, int k) const {
    return values[static_cast<std::size_t>(i) * (2 * k_max + 1) + k + k_max];
  }
  std::complex<double>& at(int i, int k) {
    return values[static_cast<std::size_t>(i) * (2 * k_max + 1) + k + k_max];
  }
};

KnSymbol kn_symbol(const Tvir& tvir, int k_max);

}  // namespace convprod

#endif
