#ifndef CONVPROD_GRID_HPP
#define CONVPROD_GRID_HPP

#include <cstddef>
#include <vector>

#include "convprod/errors.hpp"

namespace convprod {

// Uniform periodic sampling of the circle [-1/2, 1/2). Sample i sits at
// t_i = (i - n/2)/n, so index n/2 is exactly the origin.
struct Grid {
  int n = 0;

  Grid() = default;
  explicit Grid(int n_);

  double coord(int i) const { return (i - n / 2) / static_cast<double>(n); }
  int center() const { return n / 2; }
  int wrap(int i) const {
    int r = i % n;
    return r < 0 ? r + n : r;
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

struct Signal {
  Grid grid;
  std::vector<double> v;
};

// Validating constructor; rejects length mismatch and non-finite values.
Signal make_signal(Grid grid, std::vector<double> values);

Signal zero_signal(Grid grid);
Signal constant_signal(Grid grid, double c);
Signal impulse_signal(Grid grid, int index, double amplitude = 1.0);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

// Quadrature inner product (1/n) sum_i a_i b_i and the induced norm.
double quad_dot(const Signal& a, const Signal& b);
double quad_norm(const Signal& a);

}  // namespace convprod

#endif
