#include "convprod/meyer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "convprod/conv.hpp"
#include "convprod/errors.hpp"
#include "convprod/wavelet.hpp"

namespace convprod {

namespace {

constexpr int kManifestVersion = 1;

bool pow2_in_range(int m, int n) {
  return m >= 1 && m <= n && (m & (m - 1)) == 0;
}

}  // namespace

MeyerRep meyer_expand(const Tvir& tvir, int m1, int m2, int alpha) {
  const int n = tvir.grid.n;
  if (!pow2_in_range(m1, n) || !pow2_in_range(m2, n))
    throw precondition_error(
        "meyer_expand: m1, m2 must be powers of two <= n");
  WaveletSpec spec{alpha, 0};
  std::vector<double> full = dwt2(tvir.a, tvir.grid, spec);
  MeyerRep rep{tvir.grid, alpha, m1, m2,
               std::vector<double>(static_cast<std::size_t>(m1) * m2)};
  // quadrature scaling: <T, atom x atom> = plain 2D coefficient / n
  for (int l = 0; l < m1; ++l)
    for (int u = 0; u < m2; ++u)
      rep.at(l, u) = full[static_cast<std::size_t>(l) * n + u] / n;
  return rep;
}

Signal meyer_apply(const MeyerRep& rep, const Signal& u) {
  require_same_grid(rep.grid, u.grid, "meyer_apply");
  const Grid grid = rep.grid;
  const int n = grid.n;
  WaveletSpec spec{rep.alpha, 0};
  const int levels = wavelet_levels_or_default(spec, grid);
  const double root_n = std::sqrt(static_cast<double>(n));

  Signal out = zero_signal(grid);
  Signal masked = zero_signal(grid);
  for (int mu = 0; mu < rep.m2; ++mu) {
    // c~_mu = sum_lambda c[lambda][mu] atom_lambda via one synthesis pass
    WaveletCoeffs col{grid, levels, std::vector<double>(n, 0.0)};
    for (int l = 0; l < rep.m1; ++l) col.c[l] = rep.at(l, mu) * root_n;
    Signal ct = idwt(col, spec);
    Signal atom = wavelet_atom_flat(spec, mu, grid);
    for (int j = 0; j < n; ++j) masked.v[j] = atom.v[j] * u.v[j];
    Support cs = minimal_support(ct.v);
    Support ms = minimal_support(masked.v);
    Signal conv = overlap_add_cconv(ct, masked, cs.len, ms.len);
    for (int a = 0; a < n; ++a) out.v[a] += conv.v[a];
  }
  for (int a = 0; a < n; ++a) out.v[a] /= n;
  return out;
}

Tvir meyer_materialize(const MeyerRep& rep) {
  const int n = rep.grid.n;
  WaveletSpec spec{rep.alpha, 0};
  std::vector<double> padded(static_cast<std::size_t>(n) * n, 0.0);
  // plain 2D coefficients are n * quadrature coefficients
  for (int l = 0; l < rep.m1; ++l)
    for (int u = 0; u < rep.m2; ++u)
      padded[static_cast<std::size_t>(l) * n + u] = rep.at(l, u) * n;
  std::vector<double> a = idwt2(padded, rep.grid, spec);
  // tightest symmetric row-support bound, as for expansion materialization
  double half = 0.0;
  const double amax = [&] {
    double t = 0.0;
    for (double x : a) t = std::max(t, std::fabs(x));
    return t;
  }();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (std::fabs(a[static_cast<std::size_t>(i) * n + j]) > 1e-14 * amax) {
        half = std::max(half, std::fabs(rep.grid.coord(i)));
        break;
      }
  }
  const double kappa = std::min(1.0, std::max(2.0 * half, 2.0 / n));
  // wavelet synthesis round-off leaves dust in the nominally zero rows
  for (int i = 0; i < n; ++i) {
    if (std::fabs(rep.grid.coord(i)) <= kappa / 2) continue;
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = 0.0;
  }
  return make_tvir(rep.grid, std::move(a), kappa);
}

std::int64_t meyer_storage_count(const MeyerRep& rep) {
  return static_cast<std::int64_t>(rep.m1) * rep.m2;
}

double meyer_flop_estimate(const MeyerRep& rep) {
  const Grid grid = rep.grid;
  const int n = grid.n;
  WaveletSpec spec{rep.alpha, 0};
  const int levels = wavelet_levels_or_default(spec, grid);
  const double root_n = std::sqrt(static_cast<double>(n));
  double acc = 0.0;
  for (int mu = 0; mu < rep.m2; ++mu) {
    WaveletCoeffs col{grid, levels, std::vector<double>(n, 0.0)};
    for (int l = 0; l < rep.m1; ++l) col.c[l] = rep.at(l, mu) * root_n;
    const double q = minimal_support(idwt(col, spec).v).len;
    const double p =
        minimal_support(wavelet_atom_flat(spec, mu, grid).v).len;
    acc += (p + q) * std::log2(std::min(p, q) + 1.0);
  }
  return acc;
}

void meyer_save(const MeyerRep& rep, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("meyer_save: cannot open " + path);
  os << "{\n";
  os << "  \"version\": " << kManifestVersion << ",\n";
  os << "  \"n\": " << rep.grid.n << ",\n";
  os << "  \"alpha\": " << rep.alpha << ",\n";
  os << "  \"m1\": " << rep.m1 << ",\n";
  os << "  \"m2\": " << rep.m2 << ",\n";
  os << "  \"coeffs\": [";
  char buf[64];
  for (std::size_t t = 0; t < rep.c.size(); ++t) {
    std::snprintf(buf, sizeof buf, "%.17g", rep.c[t]);
    os << (t ? "," : "") << buf;
  }
  os << "]\n}\n";
  if (!os) throw io_error("meyer_save: write failed for " + path);
}

MeyerRep meyer_load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("meyer_load: cannot open " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw manifest_error("meyer_load: malformed manifest: " +
                         std::string(ex.what()));
  }
  try {
    if (!j.contains("version"))
      throw manifest_error("meyer_load: missing version");
    if (j.at("version").get<int>() != kManifestVersion)
      throw version_error("meyer_load: unsupported manifest version " +
                          j.at("version").dump());
    Grid grid(j.at("n").get<int>());
    MeyerRep rep{grid, j.at("alpha").get<int>(), j.at("m1").get<int>(),
                 j.at("m2").get<int>(), {}};
    if (!pow2_in_range(rep.m1, grid.n) || !pow2_in_range(rep.m2, grid.n))
      throw manifest_error("meyer_load: invalid block sizes");
    const auto& coeffs = j.at("coeffs");
    if (static_cast<std::int64_t>(coeffs.size()) !=
        static_cast<std::int64_t>(rep.m1) * rep.m2)
      throw manifest_error("meyer_load: coefficient count mismatch");
    rep.c.reserve(coeffs.size());
    for (const auto& x : coeffs) rep.c.push_back(x.get<double>());
    return rep;
  } catch (const nlohmann::json::exception& ex) {
    throw manifest_error("meyer_load: malformed manifest: " +
                         std::string(ex.what()));
  }
}

}  // namespace convprod
