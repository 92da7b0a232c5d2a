#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "convprod/conv.hpp"
#include "convprod/errors.hpp"
#include "convprod/fft.hpp"
#include "convprod/grid.hpp"

using namespace convprod;

namespace {

constexpr double kPi = std::numbers::pi;

Signal random_signal(Grid g, std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Signal s = zero_signal(g);
  for (double& x : s.v) x = unif(rng);
  return s;
}

// oracle: direct double-sum centered circular convolution
Signal cconv_oracle(const Signal& f, const Signal& g) {
  const int n = f.grid.n;
  Signal out = zero_signal(f.grid);
  for (int a = 0; a < n; ++a) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += f.v[((a - j + n / 2) % n + n) % n] * g.v[j];
    out.v[a] = acc;
  }
  return out;
}

// oracle: direct double-sum centered correlation
Signal ccorr_oracle(const Signal& f, const Signal& v) {
  const int n = f.grid.n;
  Signal out = zero_signal(f.grid);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int a = 0; a < n; ++a)
      acc += f.v[((a - j + n / 2) % n + n) % n] * v.v[a];
    out.v[j] = acc;
  }
  return out;
}

double max_abs_diff(const Signal& a, const Signal& b) {
  double m = 0.0;
  for (int i = 0; i < a.grid.n; ++i)
    m = std::max(m, std::fabs(a.v[i] - b.v[i]));
  return m;
}

double linf(const Signal& a) {
  double m = 0.0;
  for (double x : a.v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

TEST_CASE("grid validation and coordinates") {
  CHECK_THROWS_AS(Grid(3), precondition_error);
  CHECK_THROWS_AS(Grid(12), precondition_error);
  CHECK_THROWS_AS(Grid(2), precondition_error);
  Grid g(8);
  CHECK(g.coord(4) == 0.0);
  CHECK(g.coord(0) == -0.5);
  CHECK(g.coord(7) == doctest::Approx(0.375));
}

TEST_CASE("centered_cconv identity and fixed example") {
  Grid g(4);
  Signal f = make_signal(g, {1, 0, 0, 0});
  Signal x = make_signal(g, {1, 2, 3, 4});
  Signal got = centered_cconv(f, x);
  // direct double-sum oracle gives [3, 4, 1, 2]
  CHECK(got.v[0] == doctest::Approx(3).epsilon(1e-12));
  CHECK(got.v[1] == doctest::Approx(4).epsilon(1e-12));
  CHECK(got.v[2] == doctest::Approx(1).epsilon(1e-12));
  CHECK(got.v[3] == doctest::Approx(2).epsilon(1e-12));

  std::mt19937 rng(7);
  Grid g64(64);
  Signal any = random_signal(g64, rng);
  Signal delta = impulse_signal(g64, 32);
  CHECK(max_abs_diff(centered_cconv(delta, any), any) < 1e-12);
  CHECK(linf(centered_cconv(zero_signal(g64), any)) == 0.0);
}

TEST_CASE("centered_cconv equals brute force for n <= 64") {
  std::mt19937 rng(42);
  for (int n : {4, 8, 16, 32, 64}) {
    Grid g(n);
    for (int trial = 0; trial < 25; ++trial) {
      Signal f = random_signal(g, rng);
      Signal h = random_signal(g, rng);
      Signal got = centered_cconv(f, h);
      Signal ref = cconv_oracle(f, h);
      CHECK(max_abs_diff(got, ref) < 1e-12 * std::max(1.0, linf(ref)));
    }
  }
}

TEST_CASE("centered_cconv is bilinear") {
  std::mt19937 rng(3);
  Grid g(32);
  Signal f = random_signal(g, rng), h1 = random_signal(g, rng),
         h2 = random_signal(g, rng);
  Signal combo = zero_signal(g);
  for (int i = 0; i < g.n; ++i) combo.v[i] = 2.5 * h1.v[i] - 0.5 * h2.v[i];
  Signal lhs = centered_cconv(f, combo);
  Signal r1 = centered_cconv(f, h1), r2 = centered_cconv(f, h2);
  Signal rhs = zero_signal(g);
  for (int i = 0; i < g.n; ++i) rhs.v[i] = 2.5 * r1.v[i] - 0.5 * r2.v[i];
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("centered_ccorr matches oracle and adjoint identity") {
  Grid g(4);
  Signal f = make_signal(g, {1, 0, 0, 0});
  Signal v = make_signal(g, {1, 2, 3, 4});
  Signal got = centered_ccorr(f, v);
  Signal ref = ccorr_oracle(f, v);
  CHECK(max_abs_diff(got, ref) < 1e-12);

  Grid g64(64);
  std::mt19937 rng(11);
  Signal delta = impulse_signal(g64, 32);
  Signal any = random_signal(g64, rng);
  CHECK(max_abs_diff(centered_ccorr(delta, any), any) < 1e-12);

  for (int trial = 0; trial < 20; ++trial) {
    Signal a = random_signal(g64, rng);
    Signal b = random_signal(g64, rng);
    Signal w = random_signal(g64, rng);
    double lhs = 0.0, rhs = 0.0;
    Signal conv = centered_cconv(a, b);
    Signal corr = centered_ccorr(a, w);
    for (int i = 0; i < 64; ++i) {
      lhs += conv.v[i] * w.v[i];
      rhs += b.v[i] * corr.v[i];
    }
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("grid mismatch raises dimension_error") {
  std::mt19937 rng(1);
  Signal a = random_signal(Grid(8), rng);
  Signal b = random_signal(Grid(16), rng);
  CHECK_THROWS_AS(centered_cconv(a, b), dimension_error);
  CHECK_THROWS_AS(centered_ccorr(a, b), dimension_error);
  CHECK_THROWS_AS(quad_dot(a, b), dimension_error);
}

TEST_CASE("overlap_add_cconv agrees with centered_cconv") {
  std::mt19937 rng(5);

  SUBCASE("full supports") {
    Grid g(128);
    Signal f = random_signal(g, rng), h = random_signal(g, rng);
    CHECK(max_abs_diff(overlap_add_cconv(f, h, g.n, g.n),
                       centered_cconv(f, h)) < 1e-12 * g.n);
  }

  SUBCASE("impulse filter passes the signal through") {
    Grid g(256);
    Signal f = impulse_signal(g, g.n / 2);
    Signal h = zero_signal(g);
    for (int t = 0; t < 8; ++t) h.v[(100 + t) % g.n] = 1.0 + t;
    Signal out = overlap_add_cconv(f, h, 1, 8);
    CHECK(max_abs_diff(out, h) < 1e-12);
  }

  SUBCASE("compact supports at n=1024") {
    Grid g(1024);
    Signal f = zero_signal(g), h = zero_signal(g);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int t = 0; t < 16; ++t) f.v[(700 + t) % g.n] = unif(rng);
    for (int t = 0; t < 64; ++t) h.v[(1000 + t) % g.n] = unif(rng);
    Signal got = overlap_add_cconv(f, h, 16, 64);
    Signal ref = centered_cconv(f, h);
    CHECK(max_abs_diff(got, ref) < 1e-12 * std::max(1.0, linf(ref)));
  }

  SUBCASE("every (p,q) partition on a small grid") {
    Grid g(64);
    for (int q : {1, 2, 5, 16, 33, 64}) {
      for (int p : {1, 3, 8, 31, 64}) {
        Signal f = zero_signal(g), h = zero_signal(g);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int t = 0; t < q; ++t) f.v[(50 + t) % g.n] = unif(rng);
        for (int t = 0; t < p; ++t) h.v[(20 + t) % g.n] = unif(rng);
        Signal got = overlap_add_cconv(f, h, q, p);
        Signal ref = centered_cconv(f, h);
        CHECK(max_abs_diff(got, ref) < 1e-12 * std::max(1.0, linf(ref)));
      }
    }
  }

  SUBCASE("declared support violations are contract errors") {
    Grid g(64);
    Signal f = zero_signal(g), h = zero_signal(g);
    f.v[0] = 1.0;
    f.v[32] = 1.0;  // minimal circular support length 33
    h.v[0] = 1.0;
    CHECK_THROWS_AS(overlap_add_cconv(f, h, 8, 1), contract_error);
    CHECK_THROWS_AS(overlap_add_cconv(h, f, 1, 8), contract_error);
    CHECK_NOTHROW(overlap_add_cconv(f, h, 33, 1));
  }
}

TEST_CASE("minimal_support basics") {
  std::vector<double> v(16, 0.0);
  CHECK(minimal_support(v) == Support{0, 0});
  v[5] = 1.0;
  CHECK(minimal_support(v) == Support{5, 1});
  v[7] = 1.0;
  CHECK(minimal_support(v) == Support{5, 3});
  // wrap-around support
  std::vector<double> w(16, 0.0);
  w[15] = 1.0;
  w[0] = 2.0;
  w[1] = 3.0;
  CHECK(minimal_support(w) == Support{15, 3});
}

TEST_CASE("dft conventions: constant and pure cosine") {
  Grid g(16);
  Spectrum c = dft(constant_signal(g, 3.5));
  CHECK(std::abs(c.at(0) - std::complex<double>(3.5)) < 1e-13);
  for (int k = -8; k < 8; ++k)
    if (k != 0) CHECK(std::abs(c.at(k)) < 1e-13);

  Signal u = zero_signal(g);
  for (int j = 0; j < g.n; ++j) u.v[j] = std::cos(2.0 * kPi * g.coord(j));
  Spectrum s = dft(u);
  CHECK(std::abs(s.at(1) - std::complex<double>(0.5)) < 1e-13);
  CHECK(std::abs(s.at(-1) - std::complex<double>(0.5)) < 1e-13);
  for (int k = -8; k < 8; ++k)
    if (k != 1 && k != -1) CHECK(std::abs(s.at(k)) < 1e-13);
}

TEST_CASE("dft against direct O(n^2) sum, round trip and Parseval") {
  Grid g(16);
  std::mt19937 rng(9);
  Signal u = random_signal(g, rng);
  Spectrum s = dft(u);
  for (int k = -8; k < 8; ++k) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < g.n; ++j) {
      double ang = -2.0 * kPi * k * g.coord(j);
      acc += u.v[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    acc /= g.n;
    CHECK(std::abs(s.at(k) - acc) < 1e-12);
  }
  CHECK(max_abs_diff(idft(s), u) < 1e-12);

  // conjugate symmetry for real input
  for (int k = 1; k < 8; ++k)
    CHECK(std::abs(s.at(-k) - std::conj(s.at(k))) < 1e-13);

  // Parseval at several sizes
  for (int n : {8, 64, 256}) {
    Grid gg(n);
    Signal w = random_signal(gg, rng);
    double quad = 0.0;
    for (double x : w.v) quad += x * x;
    quad /= n;
    double spec = 0.0;
    Spectrum ws = dft(w);
    for (int k = -n / 2; k < n / 2; ++k) spec += std::norm(ws.at(k));
    CHECK(std::fabs(quad - spec) < 1e-12 * std::max(1.0, quad));
  }
}

TEST_CASE("sobolev_norm_sq") {
  Grid g(64);
  CHECK(sobolev_norm_sq(constant_signal(g, 2.0), 3) ==
        doctest::Approx(4.0).epsilon(1e-12));

  Signal u = zero_signal(g);
  for (int j = 0; j < g.n; ++j) u.v[j] = std::cos(2.0 * kPi * g.coord(j));
  // u_hat[+-1] = 1/2, weight (1+1)^1 -> 2 * (1/4) * 2 = 1
  CHECK(sobolev_norm_sq(u, 1) == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937 rng(21);
  Signal w = random_signal(g, rng);
  Spectrum s = dft(w);
  double direct = 0.0;
  for (int k = -32; k < 32; ++k)
    direct += std::norm(s.at(k)) * std::pow(1.0 + k * k, 2);
  CHECK(sobolev_norm_sq(w, 2) ==
        doctest::Approx(direct).epsilon(1e-12));

  CHECK_THROWS_AS(sobolev_norm_sq(w, -1), precondition_error);
}
