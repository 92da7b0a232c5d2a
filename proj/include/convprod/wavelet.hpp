#ifndef CONVPROD_WAVELET_HPP
#define CONVPROD_WAVELET_HPP

#include <vector>

#include "convprod/grid.hpp"

namespace convprod {

// Periodized Daubechies filter bank; alpha = vanishing moments, filter
// length 2*alpha, alpha in 1..8. levels <= log2(n) cascade depth.
struct WaveletSpec {
  int alpha = 2;
  int levels = 0;  // 0 = full depth (down to a single scaling coefficient)
};

// Analysis lowpass filter h (sums to sqrt 2); highpass is
// g[t] = (-1)^t h[2*alpha-1-t].
const std::vector<double>& daubechies_filter(int alpha);

// Coefficient layout: [scaling block (n/2^J) | detail blocks coarse to fine
// (n/2^J, ..., n/2)]. The transform matrix is orthonormal in the plain dot
// product at every depth.
struct WaveletCoeffs {
  Grid grid;
  int levels = 0;
  std::vector<double> c;
};

WaveletCoeffs dwt(const Signal& u, const WaveletSpec& spec);
Signal idwt(const WaveletCoeffs& coeffs, const WaveletSpec& spec);

int wavelet_levels_or_default(const WaveletSpec& spec, Grid grid);

// Atom indexing for the full-depth transform (levels = log2 n):
// level 0 shift 0 is the single scaling atom; detail level b in 1..log2(n)
// holds 2^(b-1) atoms. flat index = 0 for the scaling atom, 2^(b-1)+shift
// otherwise. Atoms are sqrt(n) * idwt(unit coefficient), hence orthonormal
// under the quadrature dot product.
int wavelet_flat_index(int level, int shift, Grid grid);
Signal wavelet_atom(const WaveletSpec& spec, int level, int shift, Grid grid);
Signal wavelet_atom_flat(const WaveletSpec& spec, int flat, Grid grid);

// Separable 2D transform of an n x n row-major matrix (rows, then columns).
std::vector<double> dwt2(const std::vector<double>& a, Grid grid,
                         const WaveletSpec& spec);
std::vector<double> idwt2(const std::vector<double>& c, Grid grid,
                          const WaveletSpec& spec);

}  // namespace convprod

#endif
