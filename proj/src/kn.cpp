#include "convprod/kn.hpp"

#include <string>

#include "convprod/errors.hpp"
#include "convprod/fft.hpp"

namespace convprod {

KnSymbol kn_symbol(const Tvir& tvir, int k_max) {
  const int n = tvir.grid.n;
  if (k_max < 0 || k_max > n / 2 - 1)
    throw precondition_error("kn_symbol: k_max must be in 0.." +
                             std::to_string(n / 2 - 1));
  KnSymbol sym{tvir.grid, k_max,
               std::vector<std::complex<double>>(
                   static_cast<std::size_t>(n) * (2 * k_max + 1))};
  for (int i = 0; i < n; ++i) {
    Spectrum sp = dft(tvir.row(i));
    for (int k = -k_max; k <= k_max; ++k) sym.at(i, k) = sp.at(k);
  }
  return sym;
}

}  // namespace convprod
