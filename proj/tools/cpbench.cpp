// cpbench: desk-scale benchmark harness for convolution-product expansions.
// Subcommands: spectrum, rate, timing, compare. Emits CSV; exit code 0 on
// success, 2 on precondition errors, 3 on I/O errors.
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convprod/bench.hpp"
#include "convprod/errors.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty())
    throw convprod::precondition_error("expected a comma-separated int list");
  return out;
}

struct Options {
  std::string kernel = "gaussian";
  std::string method = "spline";
  int n = 256;
  std::string m_csv = "4,8,16,32";
  std::string n_csv;
  int alpha = 1;
  std::string out = "out.csv";
  std::uint64_t seed = 1;
};

// --config JSON provides defaults; explicit flags win.
void merge_config(const std::string& path, CLI::App* cmd, Options& opt) {
  std::ifstream is(path);
  if (!is) throw convprod::io_error("cannot open config " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw convprod::precondition_error("bad config JSON: " +
                                       std::string(ex.what()));
  }
  auto set_if_default = [&](const char* flag, auto& field) {
    if (!j.contains(flag)) return;
    const CLI::Option* opt = cmd->get_option_no_throw(std::string("--") + flag);
    if (opt && opt->count() > 0) return;  // explicit flags win
    j.at(flag).get_to(field);
  };
  set_if_default("kernel", opt.kernel);
  set_if_default("method", opt.method);
  set_if_default("n", opt.n);
  set_if_default("m", opt.m_csv);
  set_if_default("n_list", opt.n_csv);
  set_if_default("alpha", opt.alpha);
  set_if_default("out", opt.out);
  set_if_default("seed", opt.seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convolution-product expansion benchmarks"};
  app.require_subcommand(1);

  Options opt;
  std::string config_path;

  auto add_common = [&](CLI::App* cmd, bool wants_method) {
    cmd->add_option("--kernel", opt.kernel,
                    "gaussian|hat|piecewise|worst_case|pure_conv");
    if (wants_method)
      cmd->add_option("--method", opt.method,
                      "fourier|spline|wavelet|svd|als|interp|meyer");
    cmd->add_option("--n", opt.n, "grid size (power of two)");
    cmd->add_option("--alpha", opt.alpha, "spline/wavelet order");
    cmd->add_option("--out", opt.out, "output CSV path");
    cmd->add_option("--seed", opt.seed, "seed for random timing vectors");
    cmd->add_option("--config", config_path, "JSON config (flags win)");
  };

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "singular values of the operator, decreasing");
  add_common(spectrum, false);

  CLI::App* rate =
      app.add_subcommand("rate", "error/cost table over expansion orders");
  add_common(rate, true);
  rate->add_option("--m", opt.m_csv, "comma list of orders");

  CLI::App* timing =
      app.add_subcommand("timing", "fast vs dense apply wall clock");
  add_common(timing, true);
  timing->add_option("--m", opt.m_csv, "expansion order (single value)");
  timing->add_option("--n-list", opt.n_csv, "comma list of grid sizes");

  CLI::App* compare =
      app.add_subcommand("compare", "all methods on one kernel");
  add_common(compare, false);
  compare->add_option("--m", opt.m_csv, "comma list of orders");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) merge_config(config_path, active, opt);

    if (active == spectrum) {
      convprod::Tvir tvir = convprod::make_gallery_kernel(opt.kernel, opt.n);
      std::vector<double> sigma = convprod::operator_spectrum(tvir);
      convprod::write_spectrum_csv(opt.out, sigma);
      std::printf("spectrum: kernel=%s n=%d -> %s\n", opt.kernel.c_str(),
                  opt.n, opt.out.c_str());
    } else if (active == rate) {
      convprod::RateReport report = convprod::run_rate(
          opt.kernel, opt.method, parse_int_list(opt.m_csv), opt.n, opt.alpha);
      convprod::write_rate_csv(opt.out, report);
      if (report.slope)
        std::printf("slope,%.17g\n", *report.slope);
      else
        std::printf("slope,nan\n");
    } else if (active == timing) {
      std::vector<int> ns =
          opt.n_csv.empty() ? std::vector<int>{opt.n} : parse_int_list(opt.n_csv);
      std::vector<int> ms = parse_int_list(opt.m_csv);
      std::vector<convprod::TimingPoint> rows = convprod::run_timing(
          opt.kernel, opt.method, ms.front(), ns, opt.alpha, opt.seed);
      convprod::write_timing_csv(opt.out, rows);
      for (const auto& pt : rows)
        std::printf("n=%d dense_ms=%g fast_ms=%g\n", pt.n, pt.dense_ms,
                    pt.fast_ms);
    } else {  // compare
      std::vector<convprod::RateReport> reports;
      for (const std::string& method : convprod::method_ids())
        reports.push_back(convprod::run_rate(
            opt.kernel, method, parse_int_list(opt.m_csv), opt.n, opt.alpha));
      convprod::write_compare_csv(opt.out, reports);
      std::printf("compare: kernel=%s n=%d -> %s\n", opt.kernel.c_str(), opt.n,
                  opt.out.c_str());
    }
  } catch (const convprod::io_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const convprod::precondition_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
