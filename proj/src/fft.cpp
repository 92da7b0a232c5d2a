#include "convprod/fft.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "convprod/errors.hpp"

namespace convprod {

namespace {

// Forward twiddles exp(-2 i pi j / n) for j < n/2, cached per length.
const std::vector<std::complex<double>>& twiddles(std::size_t n) {
  thread_local std::unordered_map<std::size_t,
                                  std::vector<std::complex<double>>>
      cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> w(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    double ang = -2.0 * std::numbers::pi * static_cast<double>(j) /
                 static_cast<double>(n);
    w[j] = {std::cos(ang), std::sin(ang)};
  }
  return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw precondition_error("fft_inplace: length must be a power of two");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> tw = w[j * step];
        if (inverse) tw = std::conj(tw);
        std::complex<double> u = a[i + j];
        std::complex<double> t = a[i + j + len / 2] * tw;
        a[i + j] = u + t;
        a[i + j + len / 2] = u - t;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

Spectrum dft(const Signal& u) {
  const int n = u.grid.n;
  std::vector<std::complex<double>> a(n);
  for (int j = 0; j < n; ++j) a[j] = u.v[j];
  fft_inplace(a, false);
  // u_hat[k] = (-1)^k / n * FFT(u)[k mod n], from t_j = (j - n/2)/n.
  Spectrum s{u.grid, std::vector<std::complex<double>>(n)};
  for (int k = -n / 2; k < n / 2; ++k) {
    int idx = k < 0 ? k + n : k;
    double sign = (k & 1) ? -1.0 : 1.0;
    s.at(k) = sign / n * a[idx];
  }
  return s;
}

Signal idft(const Spectrum& s) {
  const int n = s.grid.n;
  std::vector<std::complex<double>> a(n);
  for (int k = -n / 2; k < n / 2; ++k) {
    int idx = k < 0 ? k + n : k;
    double sign = (k & 1) ? -1.0 : 1.0;
    a[idx] = sign * s.at(k);
  }
  fft_inplace(a, true);
  Signal u = zero_signal(s.grid);
  for (int j = 0; j < n; ++j) u.v[j] = a[j].real() * n;
  return u;
}

double sobolev_norm_sq(const Signal& u, int s) {
  if (s < 0) throw precondition_error("sobolev_norm_sq: s must be >= 0");
  Spectrum sp = dft(u);
  double acc = 0.0;
  for (int k = -u.grid.n / 2; k < u.grid.n / 2; ++k) {
    double w = std::pow(1.0 + static_cast<double>(k) * k, s);
    acc += std::norm(sp.at(k)) * w;
  }
  return acc;
}

}  // namespace convprod
