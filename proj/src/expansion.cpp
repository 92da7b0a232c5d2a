#include "convprod/expansion.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "convprod/errors.hpp"

namespace convprod {

namespace {
constexpr int kManifestVersion = 1;
}

Term make_term(Signal h, Signal w) {
  require_same_grid(h.grid, w.grid, "make_term");
  Support hs = minimal_support(h.v);
  Support ws = minimal_support(w.v);
  return Term{std::move(h), hs, std::move(w), ws};
}

Signal apply(const Expansion& e, const Signal& u) {
  require_same_grid(e.grid, u.grid, "apply");
  const int n = e.grid.n;
  Signal out = zero_signal(e.grid);
  Signal masked = zero_signal(e.grid);
  for (const Term& t : e.terms) {
    for (int j = 0; j < n; ++j) masked.v[j] = t.w.v[j] * u.v[j];
    Signal conv = overlap_add_cconv(t.h, masked, t.h_support.len,
                                    t.w_support.len);
    for (int a = 0; a < n; ++a) out.v[a] += conv.v[a];
  }
  for (int a = 0; a < n; ++a) out.v[a] /= n;
  return out;
}

Signal apply_adjoint(const Expansion& e, const Signal& v) {
  require_same_grid(e.grid, v.grid, "apply_adjoint");
  const int n = e.grid.n;
  Signal out = zero_signal(e.grid);
  for (const Term& t : e.terms) {
    Signal corr = centered_ccorr(t.h, v);
    for (int j = 0; j < n; ++j) out.v[j] += t.w.v[j] * corr.v[j];
  }
  for (int j = 0; j < n; ++j) out.v[j] /= n;
  return out;
}

Tvir materialize(const Expansion& e) {
  const int n = e.grid.n;
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const Term& t : e.terms) {
    for (int s = 0; s < t.h_support.len; ++s) {
      const int i = (t.h_support.start + s) % n;
      const double hi = t.h.v[i];
      if (hi == 0.0) continue;
      double* row = &a[static_cast<std::size_t>(i) * n];
      for (int r = 0; r < t.w_support.len; ++r) {
        const int j = (t.w_support.start + r) % n;
        row[j] += hi * t.w.v[j];
      }
    }
  }
  // tightest symmetric row-support bound
  double half = 0.0;
  for (int i = 0; i < n; ++i) {
    bool nonzero = false;
    for (int j = 0; j < n; ++j)
      if (a[static_cast<std::size_t>(i) * n + j] != 0.0) {
        nonzero = true;
        break;
      }
    if (nonzero) half = std::max(half, std::fabs(e.grid.coord(i)));
  }
  double kappa = std::min(1.0, std::max(2.0 * half, 2.0 / n));
  return make_tvir(e.grid, std::move(a), kappa);
}

double flop_estimate(const Expansion& e) {
  double acc = 0.0;
  for (const Term& t : e.terms) {
    const double p = t.w_support.len;
    const double q = t.h_support.len;
    acc += (p + q) * std::log2(std::min(p, q) + 1.0);
  }
  return acc;
}

std::int64_t storage_count(const Expansion& e) {
  std::int64_t acc = 0;
  for (const Term& t : e.terms) acc += t.w_support.len + t.h_support.len;
  return acc;
}

namespace {

void write_values(std::ostream& os, const Signal& s, const Support& sup) {
  char buf[64];
  os << '[';
  for (int t = 0; t < sup.len; ++t) {
    std::snprintf(buf, sizeof buf, "%.17g",
                  s.v[(sup.start + t) % s.grid.n]);
    os << (t ? "," : "") << buf;
  }
  os << ']';
}

}  // namespace

void save(const Expansion& e, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("save: cannot open " + path);
  os << "{\n";
  os << "  \"version\": " << kManifestVersion << ",\n";
  os << "  \"n\": " << e.grid.n << ",\n";
  os << "  \"m\": " << e.order() << ",\n";
  os << "  \"provenance\": " << nlohmann::json(e.provenance).dump() << ",\n";
  os << "  \"terms\": [";
  for (int k = 0; k < e.order(); ++k) {
    const Term& t = e.terms[k];
    os << (k ? ",\n    " : "\n    ");
    os << "{\"h_support\": [" << t.h_support.start << "," << t.h_support.len
       << "], \"h_values\": ";
    write_values(os, t.h, t.h_support);
    os << ", \"w_support\": [" << t.w_support.start << "," << t.w_support.len
       << "], \"w_values\": ";
    write_values(os, t.w, t.w_support);
    os << "}";
  }
  os << "\n  ]\n}\n";
  if (!os) throw io_error("save: write failed for " + path);
}

Expansion load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("load: cannot open " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw manifest_error("load: malformed manifest: " + std::string(ex.what()));
  }
  try {
    if (!j.contains("version")) throw manifest_error("load: missing version");
    if (j.at("version").get<int>() != kManifestVersion)
      throw version_error("load: unsupported manifest version " +
                          j.at("version").dump());
    Grid grid(j.at("n").get<int>());
    Expansion e{grid, {}, j.value("provenance", std::string())};
    const int m = j.at("m").get<int>();
    const auto& terms = j.at("terms");
    if (static_cast<int>(terms.size()) != m)
      throw manifest_error("load: term count does not match m");
    for (const auto& tj : terms) {
      Signal h = zero_signal(grid);
      Signal w = zero_signal(grid);
      const auto read_part = [&](const char* sup_key, const char* val_key,
                                 Signal& dst) {
        const auto& sup = tj.at(sup_key);
        const int start = sup.at(0).get<int>();
        const int len = sup.at(1).get<int>();
        const auto& vals = tj.at(val_key);
        if (start < 0 || start >= grid.n || len < 0 || len > grid.n ||
            static_cast<int>(vals.size()) != len)
          throw manifest_error("load: inconsistent support block");
        for (int t = 0; t < len; ++t)
          dst.v[(start + t) % grid.n] = vals.at(t).get<double>();
      };
      read_part("h_support", "h_values", h);
      read_part("w_support", "w_values", w);
      e.terms.push_back(make_term(std::move(h), std::move(w)));
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw manifest_error("load: malformed manifest: " + std::string(ex.what()));
  }
}

}  // namespace convprod
