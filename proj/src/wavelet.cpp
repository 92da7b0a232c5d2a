#include "convprod/wavelet.hpp"

#include <array>
#include <cmath>
#include <string>

#include "convprod/errors.hpp"

namespace convprod {

namespace {

// Daubechies analysis lowpass, alpha = 1..8 vanishing moments, minimal-phase
// spectral factorization, 17 significant digits.
const std::array<std::vector<double>, 9> kDaubechies = {{
    {},
    {0.70710678118654752, 0.70710678118654752},
    {-0.12940952255126038, 0.22414386804201338, 0.83651630373780791,
     0.48296291314453414},
    {0.035226291885709537, -0.085441273882026662, -0.13501102001025459,
     0.45987750211849157, 0.80689150931109258, 0.33267055295008262},
    {-0.010597401785069032, 0.0328830116668852, 0.030841381835560764,
     -0.18703481171909308, -0.027983769416859854, 0.63088076792985891,
     0.71484657055291565, 0.2303778133088965},
    {0.0033357252854737713, -0.012580751999081999, -0.0062414902127982743,
     0.077571493840045714, -0.032244869584638375, -0.24229488706638203,
     0.13842814590132073, 0.72430852843777293, 0.60382926979718967,
     0.16010239797419291},
    {-0.0010773010853084796, 0.0047772575109455106, 0.00055384220116149614,
     -0.03158203931748603, 0.027522865530305729, 0.097501605587323049,
     -0.12976686756726194, -0.22626469396543982, 0.31525035170919763,
     0.75113390802109535, 0.49462389039845309, 0.11154074335010946},
    {0.00035371379997452025, -0.0018016407040474909, 0.00042957797292136652,
     0.012550998556099841, -0.016574541630666881, -0.038029936935014414,
     0.080612609151083072, 0.071309219266830265, -0.22403618499387498,
     -0.14390600392856498, 0.46978228740519312, 0.72913209084623512,
     0.39653931948191731, 0.077852054085009179},
    {-0.00011747678412476953, 0.00067544940645056937, -0.00039174037337694705,
     -0.0048703529934515743, 0.0087460940474057767, 0.013981027917398282,
     -0.044088253930794752, -0.017369301001807546, 0.12874742662047846,
     0.0004724845739132821, -0.28401554296154693, -0.015829105256349306,
     0.58535468365420671, 0.67563073629728981, 0.31287159091429997,
     0.05441584224310401},
}};

int log2i(int n) {
  int l = 0;
  while ((1 << l) < n) ++l;
  return l;
}

// one analysis step: len even; out = [approx(len/2) | detail(len/2)]
void analysis_step(const double* x, double* out, int len,
                   const std::vector<double>& h) {
  const int half = len / 2;
  const int L = static_cast<int>(h.size());
  for (int i = 0; i < half; ++i) {
    double a = 0.0, d = 0.0;
    for (int t = 0; t < L; ++t) {
      const double xv = x[(2 * i + t) % len];
      a += h[t] * xv;
      d += ((t & 1) ? -h[L - 1 - t] : h[L - 1 - t]) * xv;
    }
    out[i] = a;
    out[half + i] = d;
  }
}

// transpose of analysis_step
void synthesis_step(const double* approx, const double* detail, double* x,
                    int len, const std::vector<double>& h) {
  const int half = len / 2;
  const int L = static_cast<int>(h.size());
  for (int j = 0; j < len; ++j) x[j] = 0.0;
  for (int i = 0; i < half; ++i) {
    for (int t = 0; t < L; ++t) {
      const int j = (2 * i + t) % len;
      const double g = (t & 1) ? -h[L - 1 - t] : h[L - 1 - t];
      x[j] += h[t] * approx[i] + g * detail[i];
    }
  }
}

}  // namespace

const std::vector<double>& daubechies_filter(int alpha) {
  if (alpha < 1 || alpha > 8)
    throw precondition_error("daubechies_filter: alpha must be in 1..8");
  return kDaubechies[alpha];
}

int wavelet_levels_or_default(const WaveletSpec& spec, Grid grid) {
  const int maxlev = log2i(grid.n);
  const int J = spec.levels == 0 ? maxlev : spec.levels;
  if (J < 1 || J > maxlev)
    throw precondition_error("wavelet: levels must be in 1.." +
                             std::to_string(maxlev));
  return J;
}

WaveletCoeffs dwt(const Signal& u, const WaveletSpec& spec) {
  const int n = u.grid.n;
  const int J = wavelet_levels_or_default(spec, u.grid);
  const std::vector<double>& h = daubechies_filter(spec.alpha);
  WaveletCoeffs out{u.grid, J, u.v};
  std::vector<double> buf(n);
  int len = n;
  for (int lev = 0; lev < J; ++lev) {
    analysis_step(out.c.data(), buf.data(), len, h);
    for (int i = 0; i < len; ++i) out.c[i] = buf[i];
    len /= 2;
  }
  return out;
}

Signal idwt(const WaveletCoeffs& coeffs, const WaveletSpec& spec) {
  const int n = coeffs.grid.n;
  const int J = coeffs.levels;
  const std::vector<double>& h = daubechies_filter(spec.alpha);
  Signal out{coeffs.grid, coeffs.c};
  std::vector<double> buf(n);
  int len = n >> J;
  for (int lev = 0; lev < J; ++lev) {
    synthesis_step(out.v.data(), out.v.data() + len, buf.data(), 2 * len, h);
    for (int i = 0; i < 2 * len; ++i) out.v[i] = buf[i];
    len *= 2;
  }
  return out;
}

int wavelet_flat_index(int level, int shift, Grid grid) {
  const int J = log2i(grid.n);
  if (level < 0 || level > J)
    throw precondition_error("wavelet_flat_index: bad level");
  if (level == 0) {
    if (shift != 0) throw precondition_error("wavelet_flat_index: bad shift");
    return 0;
  }
  const int block = 1 << (level - 1);
  if (shift < 0 || shift >= block)
    throw precondition_error("wavelet_flat_index: bad shift");
  return block + shift;
}

Signal wavelet_atom_flat(const WaveletSpec& spec, int flat, Grid grid) {
  if (flat < 0 || flat >= grid.n)
    throw precondition_error("wavelet_atom: index out of range");
  WaveletCoeffs c{grid, log2i(grid.n), std::vector<double>(grid.n, 0.0)};
  c.c[flat] = std::sqrt(static_cast<double>(grid.n));
  WaveletSpec full = spec;
  full.levels = c.levels;
  return idwt(c, full);
}

Signal wavelet_atom(const WaveletSpec& spec, int level, int shift, Grid grid) {
  return wavelet_atom_flat(spec, wavelet_flat_index(level, shift, grid), grid);
}

std::vector<double> dwt2(const std::vector<double>& a, Grid grid,
                         const WaveletSpec& spec) {
  const int n = grid.n;
  std::vector<double> c(a.size());
  Signal tmp = zero_signal(grid);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) tmp.v[j] = a[static_cast<std::size_t>(i) * n + j];
    WaveletCoeffs w = dwt(tmp, spec);
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i) * n + j] = w.c[j];
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) tmp.v[i] = c[static_cast<std::size_t>(i) * n + j];
    WaveletCoeffs w = dwt(tmp, spec);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i) * n + j] = w.c[i];
  }
  return c;
}

std::vector<double> idwt2(const std::vector<double>& c, Grid grid,
                          const WaveletSpec& spec) {
  const int n = grid.n;
  const int J = wavelet_levels_or_default(spec, grid);
  std::vector<double> a(c.size());
  WaveletCoeffs w{grid, J, std::vector<double>(n)};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) w.c[i] = c[static_cast<std::size_t>(i) * n + j];
    Signal s = idwt(w, spec);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + j] = s.v[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.c[j] = a[static_cast<std::size_t>(i) * n + j];
    Signal s = idwt(w, spec);
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = s.v[j];
  }
  return a;
}

}  // namespace convprod
