#include "convprod/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "convprod/bspline.hpp"
#include "convprod/errors.hpp"
#include "convprod/fft.hpp"
#include "convprod/kn.hpp"
#include "convprod/linalg.hpp"
#include "convprod/wavelet.hpp"

namespace convprod {

namespace {
constexpr double kPi = std::numbers::pi;
}

Expansion fourier_expand(const Tvir& tvir, int m) {
  const Grid grid = tvir.grid;
  const int n = grid.n;
  if (m < 0 || m > n / 2 - 1)
    throw precondition_error("fourier_expand: need 0 <= m <= n/2 - 1");

  KnSymbol sym = kn_symbol(tvir, m);
  Expansion e{grid, {}, "fourier(m=" + std::to_string(m) + ")"};

  Signal h0 = zero_signal(grid);
  for (int i = 0; i < n; ++i) h0.v[i] = sym.at(i, 0).real();
  e.terms.push_back(make_term(std::move(h0), constant_signal(grid, 1.0)));

  for (int k = 1; k <= m; ++k) {
    Signal hc = zero_signal(grid), hs = zero_signal(grid);
    for (int i = 0; i < n; ++i) {
      hc.v[i] = 2.0 * sym.at(i, k).real();
      hs.v[i] = -2.0 * sym.at(i, k).imag();
    }
    Signal wc = zero_signal(grid), ws = zero_signal(grid);
    for (int j = 0; j < n; ++j) {
      wc.v[j] = std::cos(2.0 * kPi * k * grid.coord(j));
      ws.v[j] = std::sin(2.0 * kPi * k * grid.coord(j));
    }
    e.terms.push_back(make_term(std::move(hc), std::move(wc)));
    e.terms.push_back(make_term(std::move(hs), std::move(ws)));
  }

  if (m == n / 2 - 1) {
    // complete the discrete basis with the Nyquist cosine (its sine vanishes
    // identically on the grid)
    Signal hn = zero_signal(grid), wn = zero_signal(grid);
    for (int i = 0; i < n; ++i) {
      Spectrum sp = dft(tvir.row(i));
      hn.v[i] = sp.at(-n / 2).real();
    }
    for (int j = 0; j < n; ++j) wn.v[j] = ((j - n / 2) & 1) ? -1.0 : 1.0;
    e.terms.push_back(make_term(std::move(hn), std::move(wn)));
  }
  return e;
}

Expansion spline_expand(const Tvir& tvir, int m, int alpha) {
  const Grid grid = tvir.grid;
  const int n = grid.n;
  BSplineSpace space = bspline_space(alpha, m, grid);

  std::vector<Signal> h(m, zero_signal(grid));
  for (int i = 0; i < n; ++i) {
    std::vector<double> c = bspline_project(tvir.row(i), space);
    for (int k = 0; k < m; ++k) h[k].v[i] = c[k];
  }
  Expansion e{grid, {}, "spline(m=" + std::to_string(m) +
                            ",alpha=" + std::to_string(alpha) + ")"};
  for (int k = 0; k < m; ++k)
    e.terms.push_back(make_term(std::move(h[k]), space.basis_signal(k)));
  return e;
}

Expansion wavelet_expand(const Tvir& tvir, int m, int alpha) {
  const Grid grid = tvir.grid;
  const int n = grid.n;
  if (m < 1 || m > n || (m & (m - 1)) != 0)
    throw precondition_error(
        "wavelet_expand: m must be a power of two <= n");
  WaveletSpec spec{alpha, 0};

  // h_k(x_i) = quadrature dot of row i with atom k = dwt(row)_k / sqrt(n)
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Signal> h(m, zero_signal(grid));
  for (int i = 0; i < n; ++i) {
    WaveletCoeffs c = dwt(tvir.row(i), spec);
    for (int k = 0; k < m; ++k) h[k].v[i] = c.c[k] * inv_sqrt_n;
  }
  Expansion e{grid, {}, "wavelet(m=" + std::to_string(m) +
                            ",alpha=" + std::to_string(alpha) + ")"};
  for (int k = 0; k < m; ++k)
    e.terms.push_back(
        make_term(std::move(h[k]), wavelet_atom_flat(spec, k, grid)));
  return e;
}

Signal SvdFactors::left_vector(int k) const {
  Signal s = zero_signal(grid);
  for (int i = 0; i < grid.n; ++i)
    s.v[i] = left[static_cast<std::size_t>(k) * grid.n + i];
  return s;
}

Signal SvdFactors::right_vector(int k) const {
  Signal s = zero_signal(grid);
  for (int i = 0; i < grid.n; ++i)
    s.v[i] = right[static_cast<std::size_t>(k) * grid.n + i];
  return s;
}

SvdFactors operator_svd(const Tvir& tvir) {
  const int n = tvir.grid.n;
  // Kappa-supported kernels have many identically zero rows; running the
  // sweep on the transpose lets Jacobi skip them as zero columns.
  int zero_rows = 0;
  for (int i = 0; i < n; ++i)
    if (std::fabs(tvir.grid.coord(i)) > tvir.kappa / 2) ++zero_rows;
  SvdFactors f{tvir.grid, {}, {}, {}};
  if (zero_rows > n / 8) {
    std::vector<double> at(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        at[static_cast<std::size_t>(j) * n + i] =
            tvir.a[static_cast<std::size_t>(i) * n + j];
    SvdResult r = jacobi_svd(at, n);
    f.sigma = std::move(r.s);
    f.left = std::move(r.v);
    f.right = std::move(r.u);
  } else {
    SvdResult r = jacobi_svd(tvir.a, n);
    f.sigma = std::move(r.s);
    f.left = std::move(r.u);
    f.right = std::move(r.v);
  }
  // quadrature scaling: sigma -> sigma/n, vectors -> sqrt(n) * unit vectors
  const double root_n = std::sqrt(static_cast<double>(n));
  for (double& s : f.sigma) s /= n;
  for (double& x : f.left) x *= root_n;
  for (double& x : f.right) x *= root_n;
  // sign convention: first entry of each right vector above 1e-10 of its
  // max is positive
  for (int k = 0; k < n; ++k) {
    double* e = &f.right[static_cast<std::size_t>(k) * n];
    double* fk = &f.left[static_cast<std::size_t>(k) * n];
    double emax = 0.0;
    for (int i = 0; i < n; ++i) emax = std::max(emax, std::fabs(e[i]));
    for (int i = 0; i < n; ++i) {
      if (std::fabs(e[i]) > 1e-10 * emax) {
        if (e[i] < 0.0) {
          for (int t = 0; t < n; ++t) {
            e[t] = -e[t];
            fk[t] = -fk[t];
          }
        }
        break;
      }
    }
  }
  return f;
}

Expansion svd_expand_from(const SvdFactors& factors, int m) {
  const Grid grid = factors.grid;
  const int n = grid.n;
  if (m < 0 || m > n)
    throw precondition_error("svd_expand: need 0 <= m <= n");
  Expansion e{grid, {}, "svd(m=" + std::to_string(m) + ")"};
  for (int k = 0; k < m; ++k) {
    Signal h = factors.left_vector(k);
    for (int i = 0; i < n; ++i) h.v[i] *= factors.sigma[k];
    e.terms.push_back(make_term(std::move(h), factors.right_vector(k)));
  }
  return e;
}

std::pair<Expansion, SvdFactors> svd_expand(const Tvir& tvir, int m) {
  SvdFactors f = operator_svd(tvir);
  Expansion e = svd_expand_from(f, m);
  return {std::move(e), std::move(f)};
}

namespace {

// interpolation atoms sampled on the grid: 1, cos(2 pi y), sin(2 pi y),
// cos(4 pi y), ... (the trailing lone cosine makes even orders invertible)
std::vector<Signal> fourier_interp_atoms(Grid grid, int m) {
  std::vector<Signal> atoms;
  atoms.push_back(constant_signal(grid, 1.0));
  int k = 1;
  while (static_cast<int>(atoms.size()) < m) {
    Signal c = zero_signal(grid), s = zero_signal(grid);
    for (int j = 0; j < grid.n; ++j) {
      c.v[j] = std::cos(2.0 * kPi * k * grid.coord(j));
      s.v[j] = std::sin(2.0 * kPi * k * grid.coord(j));
    }
    atoms.push_back(std::move(c));
    if (static_cast<int>(atoms.size()) < m) atoms.push_back(std::move(s));
    ++k;
  }
  return atoms;
}

}  // namespace

Expansion interp_expand(const Tvir& tvir, int m, InterpBasis basis,
                        int alpha) {
  const Grid grid = tvir.grid;
  const int n = grid.n;
  if (m < 1 || m > n)
    throw precondition_error("interp_expand: need 1 <= m <= n");

  std::vector<Signal> atoms;
  std::string basis_name;
  if (basis == InterpBasis::fourier) {
    atoms = fourier_interp_atoms(grid, m);
    basis_name = "fourier";
  } else {
    BSplineSpace space = bspline_space(alpha, m, grid);
    for (int k = 0; k < m; ++k) atoms.push_back(space.basis_signal(k));
    basis_name = "spline";
  }

  // collocation points y_i = i/m snapped to the nearest grid sample
  std::vector<int> nodes(m);
  for (int i = 0; i < m; ++i) {
    double y = static_cast<double>(i) / m;
    y -= std::floor(y + 0.5);  // wrap into [-1/2, 1/2)
    nodes[i] = grid.wrap(static_cast<int>(std::lround(y * n)) + n / 2);
  }

  std::vector<double> colloc(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      colloc[static_cast<std::size_t>(i) * m + k] = atoms[k].v[nodes[i]];
  LuFactor f = lu_factor(std::move(colloc), m);
  if (f.singular)
    throw precondition_error("interp_expand: singular collocation matrix (basis=" +
                             basis_name + ", m=" + std::to_string(m) + ")");

  std::vector<Signal> h(m, zero_signal(grid));
  std::vector<double> rhs(m);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < m; ++t) rhs[t] = tvir.at(i, nodes[t]);
    lu_solve(f, rhs);
    for (int k = 0; k < m; ++k) h[k].v[i] = rhs[k];
  }
  Expansion e{grid, {}, "interp(m=" + std::to_string(m) + ",basis=" +
                            basis_name + ")"};
  for (int k = 0; k < m; ++k)
    e.terms.push_back(make_term(std::move(h[k]), std::move(atoms[k])));
  return e;
}

AlsConfig als_default_config(Grid grid, int m, int s) {
  if (m < 1 || m > grid.n)
    throw precondition_error("als_default_config: need 1 <= m <= n");
  if (s < 1) throw precondition_error("als_default_config: need s >= 1");
  AlsConfig cfg;
  const int n = grid.n;
  // omega_k = [(k-1)/m, k/m + s/m], inclusive sample endpoints; indexed so
  // that window k contains the support of the order-s B-spline at knot k/m
  for (int k = 0; k < m; ++k) {
    const double lo = static_cast<double>(k - 1) / m;
    const double hi = static_cast<double>(k) / m + static_cast<double>(s) / m;
    const int start = static_cast<int>(std::ceil(lo * n - 1e-9));
    const int stop = static_cast<int>(std::floor(hi * n + 1e-9));
    int len = stop - start + 1;
    len = std::min(len, n);
    // coordinates are sample positions relative to t=0 at index n/2
    cfg.windows.push_back(Support{grid.wrap(start + n / 2), len});
  }
  return cfg;
}

namespace {

void validate_windows(const AlsConfig& cfg, Grid grid) {
  if (cfg.windows.empty())
    throw precondition_error("als_expand: no windows");
  std::vector<char> covered(grid.n, 0);
  for (const Support& w : cfg.windows) {
    if (w.len <= 0) throw precondition_error("als_expand: empty window");
    for (int t = 0; t < w.len; ++t) covered[(w.start + t) % grid.n] = 1;
  }
  for (int j = 0; j < grid.n; ++j)
    if (!covered[j])
      throw precondition_error("als_expand: windows do not cover the grid");
}

double objective(const Tvir& tvir, const std::vector<std::vector<double>>& h,
                 const std::vector<std::vector<double>>& w) {
  const int n = tvir.grid.n;
  const int m = static_cast<int>(h.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = tvir.at(i, j);
      for (int k = 0; k < m; ++k) v -= h[k][i] * w[k][j];
      acc += v * v;
    }
  }
  return acc / (static_cast<double>(n) * n);
}

// Least-squares Gram solver: LU on the well-conditioned path, minimum-norm
// eigenvalue-truncated solve when the Gram is numerically rank deficient.
struct GramSolver {
  int m = 0;
  bool use_lu = false;
  LuFactor lu;
  std::vector<double> gram;

  explicit GramSolver(std::vector<double> g, int m_) : m(m_), gram(g) {
    lu = lu_factor(std::move(g), m);
    use_lu = !lu.singular;
  }

  void solve(std::vector<double>& b) const {
    if (use_lu)
      lu_solve(lu, b);
    else
      gram_minnorm_solve(gram, m, b);
  }
};

void solve_gram(std::vector<double> gram, int m, std::vector<double>& b) {
  GramSolver(std::move(gram), m).solve(b);
}

}  // namespace

Expansion als_expand(const Tvir& tvir, const AlsConfig& cfg, AlsTrace* trace) {
  const Grid grid = tvir.grid;
  const int n = grid.n;
  const int m = static_cast<int>(cfg.windows.size());
  validate_windows(cfg, grid);

  // factor state: h_k, w_k as dense rows with w_k zero outside window k
  std::vector<std::vector<double>> h(m, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> w(m, std::vector<double>(n, 0.0));

  if (cfg.init == AlsConfig::Init::bspline) {
    Expansion init = spline_expand(tvir, m, cfg.bspline_alpha);
    for (int k = 0; k < m; ++k) {
      h[k] = init.terms[k].h.v;
      for (int t = 0; t < cfg.windows[k].len; ++t) {
        const int j = (cfg.windows[k].start + t) % n;
        w[k][j] = init.terms[k].w.v[j];
      }
    }
  } else {
    for (int k = 0; k < m; ++k)
      for (int t = 0; t < cfg.windows[k].len; ++t)
        w[k][(cfg.windows[k].start + t) % n] = 1.0;
  }

  // active windows per column
  std::vector<std::vector<int>> active(n);
  for (int k = 0; k < m; ++k)
    for (int t = 0; t < cfg.windows[k].len; ++t)
      active[(cfg.windows[k].start + t) % n].push_back(k);

  if (trace) {
    trace->objective.clear();
    trace->iterations = 0;
  }
  double prev = objective(tvir, h, w);

  // Each half-step is an exact least-squares solve, so it cannot increase
  // the objective in exact arithmetic; the guard below also rejects the
  // round-off regressions that ill-conditioned subproblems can produce.
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    // h-update: rows share one m x m Gram solve, H = T W (W^T W)^{-1}
    std::vector<double> gram(static_cast<std::size_t>(m) * m, 0.0);
    for (int j = 0; j < n; ++j)
      for (int a : active[j])
        for (int b : active[j])
          gram[static_cast<std::size_t>(a) * m + b] += w[a][j] * w[b][j];
    GramSolver gs(gram, m);
    std::vector<double> rhs(m);
    std::vector<std::vector<double>> h_new(m, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < m; ++k) {
        double acc = 0.0;
        const Support& win = cfg.windows[k];
        for (int t = 0; t < win.len; ++t) {
          const int j = (win.start + t) % n;
          acc += tvir.at(i, j) * w[k][j];
        }
        rhs[k] = acc;
      }
      gs.solve(rhs);
      for (int k = 0; k < m; ++k) h_new[k][i] = rhs[k];
    }
    double cur = prev;
    const double obj_h = objective(tvir, h_new, w);
    if (obj_h <= cur) {
      h = std::move(h_new);
      cur = obj_h;
    }

    // w-update: one small solve per column over its active windows
    std::vector<double> hgram(static_cast<std::size_t>(m) * m, 0.0);
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += h[a][i] * h[b][i];
        hgram[static_cast<std::size_t>(a) * m + b] = acc;
        hgram[static_cast<std::size_t>(b) * m + a] = acc;
      }
    std::vector<std::vector<double>> w_new(m, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j) {
      const std::vector<int>& act = active[j];
      const int r = static_cast<int>(act.size());
      std::vector<double> g(static_cast<std::size_t>(r) * r);
      std::vector<double> b(r);
      for (int a = 0; a < r; ++a) {
        for (int c = 0; c < r; ++c)
          g[static_cast<std::size_t>(a) * r + c] =
              hgram[static_cast<std::size_t>(act[a]) * m + act[c]];
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += h[act[a]][i] * tvir.at(i, j);
        b[a] = acc;
      }
      solve_gram(std::move(g), r, b);
      for (int a = 0; a < r; ++a) w_new[act[a]][j] = b[a];
    }
    const double obj_w = objective(tvir, h, w_new);
    if (obj_w <= cur) {
      w = std::move(w_new);
      cur = obj_w;
    }

    if (trace) {
      trace->objective.push_back(cur);
      trace->iterations = iter + 1;
    }
    const bool converged = prev - cur <= cfg.tol * std::max(prev, 1e-300);
    prev = cur;
    if (converged) break;
  }

  Expansion e{grid, {},
              "als(m=" + std::to_string(m) + ",init=" +
                  (cfg.init == AlsConfig::Init::bspline ? "bspline"
                                                        : "indicator") +
                  ")"};
  for (int k = 0; k < m; ++k) {
    Signal hk{grid, h[k]};
    Signal wk{grid, w[k]};
    e.terms.push_back(make_term(std::move(hk), std::move(wk)));
  }
  return e;
}

}  // namespace convprod
