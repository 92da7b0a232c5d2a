#ifndef CONVPROD_BENCH_HPP
#define CONVPROD_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convprod/approx.hpp"
#include "convprod/expansion.hpp"
#include "convprod/tvir.hpp"

namespace convprod {

// Gallery kernel ids: gaussian, hat, piecewise, worst_case, pure_conv.
// worst_case uses (s=1, eps=0.1, kappa=1); pure_conv uses a centered
// Gaussian bump (sigma = 0.05) truncated at kappa = 0.3.
const std::vector<std::string>& gallery_kernel_ids();
Tvir make_gallery_kernel(const std::string& id, int n);

// Method ids: fourier, spline, wavelet, svd, als, interp, meyer.
const std::vector<std::string>& method_ids();

// Build a method's expansion with at most m terms. All methods are compared
// at equal term budget; fourier uses the largest symmetric cutoff that fits
// (floor((m-1)/2), clamped to the complete order n/2-1).
Expansion build_method(const Tvir& tvir, const std::string& method, int m,
                       int alpha);
// As above but reuses precomputed SVD factors for method == "svd".
Expansion build_method_cached(const Tvir& tvir, const std::string& method,
                              int m, int alpha, const SvdFactors* svd);

// Operator spectrum: singular values of matrix(T)/n, nonincreasing.
std::vector<double> operator_spectrum(const Tvir& tvir);

struct RatePoint {
  int m = 0;
  double error = 0.0;
  double flops = 0.0;
  std::int64_t storage = 0;
  double time_ms = 0.0;
};

struct RateReport {
  std::string kernel;
  std::string method;
  std::vector<RatePoint> rows;
  std::optional<double> slope;
};

// Ordinary least squares slope of log2(error) against log2(m) over the
// points with error > 1e-12; throws if fewer than two remain.
double fit_slope(const std::vector<std::pair<double, double>>& points);

RateReport run_rate(const std::string& kernel, const std::string& method,
                    const std::vector<int>& m_list, int n, int alpha);

struct TimingPoint {
  int n = 0;
  double dense_ms = 0.0;
  double fast_ms = 0.0;
  double flops = 0.0;
};

// Asserts fast/dense agreement (1e-10 relative) before timing anything.
std::vector<TimingPoint> run_timing(const std::string& kernel,
                                    const std::string& method, int m,
                                    const std::vector<int>& n_list, int alpha,
                                    std::uint64_t seed);

// CSV emission: header line, comma separated, 17 significant digits, LF.
void write_spectrum_csv(const std::string& path,
                        const std::vector<double>& sigma);
void write_rate_csv(const std::string& path, const RateReport& report);
void write_timing_csv(const std::string& path,
                      const std::vector<TimingPoint>& rows);
void write_compare_csv(const std::string& path,
                       const std::vector<RateReport>& reports);

}  // namespace convprod

#endif
