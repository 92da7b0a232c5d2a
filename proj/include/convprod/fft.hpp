#ifndef CONVPROD_FFT_HPP
#define CONVPROD_FFT_HPP

#include <complex>
#include <vector>

#include "convprod/grid.hpp"

namespace convprod {

// Fourier coefficients u_hat[k] for k = -n/2 .. n/2-1, stored at c[k + n/2].
// Convention: u_hat[k] = (1/n) sum_j u[j] exp(-2 i pi k t_j).
struct Spectrum {
  Grid grid;
  std::vector<std::complex<double>> c;

  const std::complex<double>& at(int k) const { return c[k + grid.n / 2]; }
  std::complex<double>& at(int k) { return c[k + grid.n / 2]; }
};

// In-place radix-2 complex transform, power-of-two length.
// forward: X[k] = sum_j x[j] exp(-2 i pi j k / n); inverse carries the 1/n.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

Spectrum dft(const Signal& u);
// Real part of the inverse series sum_k u_hat[k] exp(+2 i pi k t_j).
Signal idft(const Spectrum& s);

// sum_k |u_hat[k]|^2 (1 + k^2)^s; equals the squared quadrature norm at s=0.
double sobolev_norm_sq(const Signal& u, int s);

}  // namespace convprod

#endif
