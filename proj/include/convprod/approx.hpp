#ifndef CONVPROD_APPROX_HPP
#define CONVPROD_APPROX_HPP

#include <utility>
#include <vector>

#include "convprod/conv.hpp"
#include "convprod/expansion.hpp"
#include "convprod/tvir.hpp"

namespace convprod {

// --- fixed-basis constructors -------------------------------------------

// Row-wise Fourier truncation T_m(x,y) = sum_{|k|<=m} N(x,k) e_k(y) realized
// with real terms: the k=0 mode plus cos/sin pairs for k = 1..m (2m+1 terms).
// At the maximal cutoff m = n/2-1 the grid Nyquist cosine is appended as one
// extra term so the system spans every discrete frequency (n terms total).
Expansion fourier_expand(const Tvir& tvir, int m);

// Row-wise quadrature projection onto m periodic B-spline translates of
// order alpha; m terms. Requires m | n and m >= alpha + 2.
Expansion spline_expand(const Tvir& tvir, int m, int alpha);

// Partial wavelet series through resolution log2(m): the m first atoms of
// the full-depth periodized Daubechies transform (alpha vanishing moments).
// m must be a power of two <= n.
Expansion wavelet_expand(const Tvir& tvir, int m, int alpha);

// --- adaptive constructors ----------------------------------------------

// Operator singular system: T(x,y) = sum_k sigma_k f_k(x) e_k(y), vectors
// orthonormal under the quadrature dot product, sigma = plain singular
// values of matrix(T)/n.
struct SvdFactors {
  Grid grid;
  std::vector<double> sigma;
  std::vector<double> left;   // f_k, column-major n*n
  std::vector<double> right;  // e_k, column-major n*n

  Signal left_vector(int k) const;
  Signal right_vector(int k) const;
};

SvdFactors operator_svd(const Tvir& tvir);

// Truncated Schmidt expansion h_k = sigma_k f_k, w_k = e_k (m terms).
std::pair<Expansion, SvdFactors> svd_expand(const Tvir& tvir, int m);
// Same truncation from precomputed factors (cheap across several m).
Expansion svd_expand_from(const SvdFactors& factors, int m);

enum class InterpBasis { fourier, spline };

// Collocation at y_i = i/m snapped to the nearest grid point; one LU
// factorization of the m x m collocation matrix shared by all rows.
// alpha is the spline order (ignored for the Fourier basis).
Expansion interp_expand(const Tvir& tvir, int m, InterpBasis basis,
                        int alpha = 1);

// --- structured low-rank ALS ----------------------------------------------

struct AlsConfig {
  std::vector<Support> windows;  // supp(w_k) constraint, must cover the grid
  int max_iter = 200;
  double tol = 1e-8;  // relative objective decrease stop
  enum class Init { bspline, window_indicator } init = Init::bspline;
  int bspline_alpha = 1;
};

// Windows [(k-1)/m, k/m + s/m] from the B-spline comparison argument.
AlsConfig als_default_config(Grid grid, int m, int s);

struct AlsTrace {
  std::vector<double> objective;  // squared HS distance after each iteration
  int iterations = 0;
};

// Alternating least squares for min ||T - sum h_k w_k^T||_HS with
// supp(w_k) inside window k. Rank-deficient subproblem Grams are solved in
// the minimum-norm sense (eigenvalue truncation at 1e-13 relative).
Expansion als_expand(const Tvir& tvir, const AlsConfig& cfg,
                     AlsTrace* trace = nullptr);

}  // namespace convprod

#endif
