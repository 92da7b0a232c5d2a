#include "convprod/grid.hpp"

#include <cmath>
#include <string>

namespace convprod {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int n_) : n(n_) {
  if (n < 4 || !is_pow2(n))
    throw precondition_error("Grid: n must be a power of two >= 4, got " +
                             std::to_string(n));
}

Signal make_signal(Grid grid, std::vector<double> values) {
  if (static_cast<int>(values.size()) != grid.n)
    throw dimension_error("make_signal: expected " + std::to_string(grid.n) +
                          " values, got " + std::to_string(values.size()));
  for (double x : values)
    if (!std::isfinite(x))
      throw contract_error("make_signal: non-finite value");
  return Signal{grid, std::move(values)};
}

Signal zero_signal(Grid grid) {
  return Signal{grid, std::vector<double>(grid.n, 0.0)};
}

Signal constant_signal(Grid grid, double c) {
  return Signal{grid, std::vector<double>(grid.n, c)};
}

Signal impulse_signal(Grid grid, int index, double amplitude) {
  Signal s = zero_signal(grid);
  s.v[grid.wrap(index)] = amplitude;
  return s;
}

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!(a == b))
    throw dimension_error(std::string(where) + ": grid mismatch (" +
                          std::to_string(a.n) + " vs " + std::to_string(b.n) +
                          ")");
}

double quad_dot(const Signal& a, const Signal& b) {
  require_same_grid(a.grid, b.grid, "quad_dot");
  double s = 0.0;
  for (int i = 0; i < a.grid.n; ++i) s += a.v[i] * b.v[i];
  return s / a.grid.n;
}

double quad_norm(const Signal& a) { return std::sqrt(quad_dot(a, a)); }

}  // namespace convprod
