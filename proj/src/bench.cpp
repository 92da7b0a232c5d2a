#include "convprod/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "convprod/errors.hpp"
#include "convprod/gallery.hpp"
#include "convprod/linalg.hpp"
#include "convprod/meyer.hpp"

namespace convprod {

namespace {

Signal default_pure_conv_filter(Grid grid) {
  const double kappa = 0.3, sigma = 0.05;
  Signal h = zero_signal(grid);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.coord(i);
    if (std::fabs(x) > kappa / 2) continue;
    h.v[i] = std::exp(-x * x / (2.0 * sigma * sigma));
  }
  return h;
}

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// median wall time of a repeated call, one warmup
template <class F>
double time_ms_median(F&& f, int reps = 3) {
  f();
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_ms();
    f();
    t.push_back(now_ms() - t0);
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

FILE* open_csv(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw io_error("cannot open " + path + " for writing");
  return f;
}

}  // namespace

const std::vector<std::string>& gallery_kernel_ids() {
  static const std::vector<std::string> ids = {"gaussian", "hat", "piecewise",
                                               "worst_case", "pure_conv"};
  return ids;
}

Tvir make_gallery_kernel(const std::string& id, int n) {
  if (id == "gaussian") return make_gaussian(n);
  if (id == "hat") return make_hat(n);
  if (id == "piecewise") return make_piecewise(n);
  if (id == "worst_case") return make_worst_case(n, 1, 0.1, 1.0);
  if (id == "pure_conv")
    return make_pure_conv(default_pure_conv_filter(Grid(n)), 0.3);
  throw precondition_error("unknown kernel id: " + id);
}

const std::vector<std::string>& method_ids() {
  static const std::vector<std::string> ids = {
      "fourier", "spline", "wavelet", "svd", "als", "interp", "meyer"};
  return ids;
}

Expansion build_method_cached(const Tvir& tvir, const std::string& method,
                              int m, int alpha, const SvdFactors* svd) {
  if (m < 1) throw precondition_error("build_method: m must be >= 1");
  if (method == "fourier") {
    int cutoff = std::min((m - 1) / 2, tvir.grid.n / 2 - 1);
    return fourier_expand(tvir, cutoff);
  }
  if (method == "spline") return spline_expand(tvir, m, alpha);
  if (method == "wavelet") return wavelet_expand(tvir, m, alpha);
  if (method == "svd") {
    if (svd) return svd_expand_from(*svd, m);
    return svd_expand(tvir, m).first;
  }
  if (method == "als") {
    AlsConfig cfg = als_default_config(tvir.grid, m, std::max(alpha, 1));
    cfg.bspline_alpha = std::max(alpha, 1);
    return als_expand(tvir, cfg);
  }
  if (method == "interp")
    return interp_expand(tvir, m, InterpBasis::fourier, alpha);
  throw precondition_error("unknown method id: " + method);
}

Expansion build_method(const Tvir& tvir, const std::string& method, int m,
                       int alpha) {
  return build_method_cached(tvir, method, m, alpha, nullptr);
}

std::vector<double> operator_spectrum(const Tvir& tvir) {
  std::vector<double> s = singular_values(tvir.a, tvir.grid.n);
  for (double& x : s) x /= tvir.grid.n;
  return s;
}

double fit_slope(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [m, err] : points)
    if (err > 1e-12) pts.emplace_back(std::log2(m), std::log2(err));
  if (pts.size() < 2)
    throw precondition_error(
        "fit_slope: need at least two points with error > 1e-12");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double c = static_cast<double>(pts.size());
  return (c * sxy - sx * sy) / (c * sxx - sx * sx);
}

RateReport run_rate(const std::string& kernel, const std::string& method,
                    const std::vector<int>& m_list, int n, int alpha) {
  for (std::size_t t = 1; t < m_list.size(); ++t)
    if (m_list[t] <= m_list[t - 1])
      throw precondition_error("run_rate: m list must be strictly increasing");
  Tvir tvir = make_gallery_kernel(kernel, n);
  RateReport report{kernel, method, {}, std::nullopt};

  std::optional<SvdFactors> svd;
  if (method == "svd") svd = operator_svd(tvir);

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Signal u = zero_signal(tvir.grid);
  for (int i = 0; i < n; ++i) u.v[i] = unif(rng);

  for (int m : m_list) {
    RatePoint pt;
    pt.m = m;
    if (method == "meyer") {
      MeyerRep rep = meyer_expand(tvir, m, m, alpha);
      pt.error = hs_distance(meyer_materialize(rep), tvir);
      pt.storage = meyer_storage_count(rep);
      pt.flops = meyer_flop_estimate(rep);
      pt.time_ms = time_ms_median([&] { meyer_apply(rep, u); });
    } else {
      Expansion e = build_method_cached(tvir, method, m, alpha,
                                        svd ? &*svd : nullptr);
      pt.error = hs_distance(materialize(e), tvir);
      pt.storage = storage_count(e);
      pt.flops = flop_estimate(e);
      pt.time_ms = time_ms_median([&] { apply(e, u); });
    }
    report.rows.push_back(pt);
  }

  std::vector<std::pair<double, double>> pts;
  for (const RatePoint& pt : report.rows)
    pts.emplace_back(static_cast<double>(pt.m), pt.error);
  try {
    report.slope = fit_slope(pts);
  } catch (const precondition_error&) {
    report.slope = std::nullopt;  // everything already at round-off
  }
  return report;
}

std::vector<TimingPoint> run_timing(const std::string& kernel,
                                    const std::string& method, int m,
                                    const std::vector<int>& n_list, int alpha,
                                    std::uint64_t seed) {
  std::vector<TimingPoint> rows;
  for (int n : n_list) {
    Tvir tvir = make_gallery_kernel(kernel, n);
    Expansion e = build_method(tvir, method, m, alpha);
    Tvir dense = materialize(e);

    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Signal u = zero_signal(tvir.grid);
    for (int i = 0; i < n; ++i) u.v[i] = unif(rng);

    // fast path must reproduce the dense path before any timing is reported
    Signal fast = apply(e, u);
    Signal ref = apply_dense(dense, u);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      num += (fast.v[i] - ref.v[i]) * (fast.v[i] - ref.v[i]);
      den += ref.v[i] * ref.v[i];
    }
    if (num > 1e-20 * std::max(den, 1e-300))
      throw contract_error("run_timing: fast/dense mismatch at n=" +
                           std::to_string(n));

    TimingPoint pt;
    pt.n = n;
    pt.fast_ms = time_ms_median([&] { apply(e, u); });
    pt.dense_ms = time_ms_median([&] { apply_dense(dense, u); });
    pt.flops = flop_estimate(e);
    rows.push_back(pt);
  }
  return rows;
}

void write_spectrum_csv(const std::string& path,
                        const std::vector<double>& sigma) {
  FILE* f = open_csv(path);
  std::fputs("index,sigma\n", f);
  for (std::size_t i = 0; i < sigma.size(); ++i)
    std::fprintf(f, "%zu,%.17g\n", i + 1, sigma[i]);
  std::fclose(f);
}

void write_rate_csv(const std::string& path, const RateReport& report) {
  FILE* f = open_csv(path);
  std::fputs("m,error,flops,storage,time_ms\n", f);
  for (const RatePoint& pt : report.rows)
    std::fprintf(f, "%d,%.17g,%.17g,%lld,%.17g\n", pt.m, pt.error, pt.flops,
                 static_cast<long long>(pt.storage), pt.time_ms);
  std::fclose(f);
}

void write_timing_csv(const std::string& path,
                      const std::vector<TimingPoint>& rows) {
  FILE* f = open_csv(path);
  std::fputs("n,dense_ms,fast_ms,flop_estimate\n", f);
  for (const TimingPoint& pt : rows)
    std::fprintf(f, "%d,%.17g,%.17g,%.17g\n", pt.n, pt.dense_ms, pt.fast_ms,
                 pt.flops);
  std::fclose(f);
}

void write_compare_csv(const std::string& path,
                       const std::vector<RateReport>& reports) {
  FILE* f = open_csv(path);
  std::fputs("method,m,error,flops,storage,time_ms\n", f);
  for (const RateReport& r : reports)
    for (const RatePoint& pt : r.rows)
      std::fprintf(f, "%s,%d,%.17g,%.17g,%lld,%.17g\n", r.method.c_str(),
                   pt.m, pt.error, pt.flops,
                   static_cast<long long>(pt.storage), pt.time_ms);
  std::fclose(f);
}

}  // namespace convprod
