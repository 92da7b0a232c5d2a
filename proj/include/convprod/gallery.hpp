#ifndef CONVPROD_GALLERY_HPP
#define CONVPROD_GALLERY_HPP

#include "convprod/tvir.hpp"

namespace convprod {

// T(x,y) = exp(-x^2 / (2 sigma(y)^2)) / (sqrt(2 pi) sigma(y)) with
// sigma(y) = 0.08 + 0.02 cos(2 pi y), truncated to zero for |x| > kappa/2,
// kappa = 4 sup sigma = 0.40.
Tvir make_gaussian(int n);

// T(x,y) = (2/sigma(y)) max(1 - 2|x|/sigma(y), 0), a hat of width sigma(y)
// and unit area, sigma(y) = 0.1 + 0.3 (1 - |y|); kappa = sup sigma = 0.4.
Tvir make_hat(int n);

// Discontinuous rank-2 TVIR: g_{s1}(x) on |y| <= 1/4 and g_{s2}(x) outside,
// g_s(x) = exp(-x^2/s^2)/sqrt(2 pi), s1 = 0.05, s2 = 0.1.
Tvir make_piecewise(int n);

// Slow-spectrum lower-bound kernel. For kappa = 1:
//   T(x,y) = sum_{k>=1} 2 sigma_k cos(2 pi k (x+y)),
//   sigma_k = |k|^-(s + 1/2 + eps/2),
// and for kappa < 1 the x-axis is squeezed into [-kappa/2, kappa/2] with
// weights sigma_k = kappa / ((1+k^2)^s |k|^(1+eps)) and factor 2 sigma_k/kappa.
// The series is truncated at the grid Nyquist index n/2 - 1.
Tvir make_worst_case(int n, int s, double eps, double kappa);

// Degenerate y-independent TVIR T(x,y) = h(x); h must vanish outside the
// circular interval |x| <= kappa/2.
Tvir make_pure_conv(const Signal& h, double kappa);

}  // namespace convprod

#endif
