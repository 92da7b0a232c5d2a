#include "convprod/conv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "convprod/errors.hpp"
#include "convprod/fft.hpp"

namespace convprod {

Support minimal_support(const std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> nz;
  for (int i = 0; i < n; ++i)
    if (v[i] != 0.0) nz.push_back(i);
  if (nz.empty()) return Support{0, 0};
  if (nz.size() == 1) return Support{nz[0], 1};
  if (static_cast<int>(nz.size()) == n) return Support{0, n};
  // The complement of the largest circular gap between consecutive nonzeros
  // is the shortest covering interval.
  int best_gap = -1, best_start = 0;
  for (std::size_t t = 0; t < nz.size(); ++t) {
    int cur = nz[t];
    int next = nz[(t + 1) % nz.size()];
    int gap = (next - cur + n) % n - 1;
    if (gap > best_gap || (gap == best_gap && next < best_start)) {
      best_gap = gap;
      best_start = next;
    }
  }
  return Support{best_start, n - best_gap};
}

bool support_contains(const Support& s, int index, int n) {
  if (s.len == 0) return false;
  int off = ((index - s.start) % n + n) % n;
  return off < s.len;
}

namespace {

Signal cconv_fft(const Signal& f, const Signal& g) {
  const int n = f.grid.n;
  std::vector<std::complex<double>> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = f.v[i];
    b[i] = g.v[i];
  }
  fft_inplace(a, false);
  fft_inplace(b, false);
  for (int i = 0; i < n; ++i) a[i] *= b[i];
  fft_inplace(a, true);
  Signal out = zero_signal(f.grid);
  // rotate by n/2: centered result[a] = plain circular conv[(a + n/2) mod n]
  for (int i = 0; i < n; ++i) out.v[i] = a[(i + n / 2) % n].real();
  return out;
}

}  // namespace

Signal centered_cconv(const Signal& f, const Signal& g) {
  require_same_grid(f.grid, g.grid, "centered_cconv");
  return cconv_fft(f, g);
}

Signal centered_ccorr(const Signal& f, const Signal& v) {
  require_same_grid(f.grid, v.grid, "centered_ccorr");
  // ccorr(f, v) = cconv(reflect(f), v) with reflect[i] = f[(n-i) mod n].
  const int n = f.grid.n;
  Signal r = zero_signal(f.grid);
  for (int i = 0; i < n; ++i) r.v[i] = f.v[(n - i) % n];
  return cconv_fft(r, v);
}

namespace {

int next_pow2(int x) {
  int p = 1;
  while (p < x) p <<= 1;
  return p;
}

// Linear convolution out[t] = sum_{i+j=t} a[i] b[j], |out| = |a|+|b|-1.
// Overlap-add with the shorter sequence as the filter; direct loop when the
// filter is short enough that FFTs cannot pay off.
std::vector<double> linear_conv(const std::vector<double>& a,
                                const std::vector<double>& b) {
  const std::vector<double>& flt = a.size() <= b.size() ? a : b;
  const std::vector<double>& sig = a.size() <= b.size() ? b : a;
  const int s = static_cast<int>(flt.size());
  const int L = static_cast<int>(sig.size());
  std::vector<double> out(s + L - 1, 0.0);
  if (s <= 16) {
    for (int i = 0; i < s; ++i) {
      const double fi = flt[i];
      if (fi == 0.0) continue;
      for (int j = 0; j < L; ++j) out[i + j] += fi * sig[j];
    }
    return out;
  }
  const int N = next_pow2(2 * s);
  const int block = N - s + 1;
  std::vector<std::complex<double>> F(N, 0.0), B(N);
  for (int i = 0; i < s; ++i) F[i] = flt[i];
  fft_inplace(F, false);
  for (int pos = 0; pos < L; pos += block) {
    const int len = std::min(block, L - pos);
    std::fill(B.begin(), B.end(), std::complex<double>(0.0));
    for (int i = 0; i < len; ++i) B[i] = sig[pos + i];
    fft_inplace(B, false);
    for (int i = 0; i < N; ++i) B[i] *= F[i];
    fft_inplace(B, true);
    const int take = std::min(len + s - 1, static_cast<int>(out.size()) - pos);
    for (int i = 0; i < take; ++i) out[pos + i] += B[i].real();
  }
  return out;
}

}  // namespace

Signal overlap_add_cconv(const Signal& f, const Signal& g, int q, int p) {
  require_same_grid(f.grid, g.grid, "overlap_add_cconv");
  const int n = f.grid.n;
  if (q < 0 || q > n || p < 0 || p > n)
    throw precondition_error("overlap_add_cconv: support length out of range");

  Support sf = minimal_support(f.v);
  Support sg = minimal_support(g.v);
  if (sf.len > q)
    throw contract_error(
        "overlap_add_cconv: nonzero outside declared support of f (need " +
        std::to_string(sf.len) + ", declared " + std::to_string(q) + ")");
  if (sg.len > p)
    throw contract_error(
        "overlap_add_cconv: nonzero outside declared support of g (need " +
        std::to_string(sg.len) + ", declared " + std::to_string(p) + ")");

  Signal out = zero_signal(f.grid);
  if (sf.len == 0 || sg.len == 0) return out;

  std::vector<double> fa(sf.len), ga(sg.len);
  for (int i = 0; i < sf.len; ++i) fa[i] = f.v[(sf.start + i) % n];
  for (int i = 0; i < sg.len; ++i) ga[i] = g.v[(sg.start + i) % n];

  std::vector<double> lin = linear_conv(fa, ga);
  // f index x = sf+i, g index j = sg+k contribute at a = x + j - n/2.
  const int base = ((sf.start + sg.start - n / 2) % n + n) % n;
  for (std::size_t t = 0; t < lin.size(); ++t)
    out.v[(base + t) % n] += lin[t];
  return out;
}

}  // namespace convprod
