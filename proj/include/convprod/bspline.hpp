#ifndef CONVPROD_BSPLINE_HPP
#define CONVPROD_BSPLINE_HPP

#include <complex>
#include <vector>

#include "convprod/conv.hpp"
#include "convprod/grid.hpp"

namespace convprod {

// m equispaced periodic B-spline translates of order alpha sampled on the
// grid. Requires m | n (translates are exact circular shifts by n/m) and
// m >= alpha + 2. Basis k is base shifted by k*n/m samples.
struct BSplineSpace {
  Grid grid;
  int alpha = 0;
  int m = 0;
  std::vector<double> base;  // sampled B_{alpha,m} centered at t = 0
  Support base_support;
  std::vector<std::complex<double>> gram_hat;  // DFT of the circulant Gram

  double basis(int k, int i) const {
    const int n = grid.n;
    return base[((i - k * (n / m)) % n + n) % n];
  }
  Signal basis_signal(int k) const;
};

BSplineSpace bspline_space(int alpha, int m, Grid grid);

// Quadrature-orthogonal projection coefficients of a row onto the space;
// the circulant Gram system is solved by a length-m FFT.
std::vector<double> bspline_project(const Signal& row,
                                    const BSplineSpace& space);

}  // namespace convprod

#endif
