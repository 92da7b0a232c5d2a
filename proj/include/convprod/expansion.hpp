#ifndef CONVPROD_EXPANSION_HPP
#define CONVPROD_EXPANSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "convprod/conv.hpp"
#include "convprod/tvir.hpp"

namespace convprod {

// One expansion term: filter h (support length q) and window w (support
// length p). Declared supports contain every nonzero.
struct Term {
  Signal h;
  Support h_support;
  Signal w;
  Support w_support;
};

Term make_term(Signal h, Signal w);

// Ordered convolution-product expansion; applies as
// (1/n) sum_k h_k # (w_k . u), i.e. the operator with TVIR
// T_m(x,y) = sum_k h_k(x) w_k(y).
struct Expansion {
  Grid grid;
  std::vector<Term> terms;
  std::string provenance;

  int order() const { return static_cast<int>(terms.size()); }
};

// Sectioned fast application; terms are summed in list order.
Signal apply(const Expansion& e, const Signal& u);

// Adjoint: (1/n) sum_k w_k . ccorr(h_k, v); satisfies the quadrature
// dot-product identity <apply(e,u), v> = <u, apply_adjoint(e,v)>.
Signal apply_adjoint(const Expansion& e, const Signal& v);

// Dense TVIR sum_k h_k w_k^T; kappa is the smallest symmetric row-support
// bound covering every nonzero row.
Tvir materialize(const Expansion& e);

// Cost model sum_k (p_k + q_k) * log2(min(p_k, q_k) + 1).
double flop_estimate(const Expansion& e);

// Retained samples sum_k (p_k + q_k).
std::int64_t storage_count(const Expansion& e);

// Versioned JSON manifest, decimal values with 17 significant digits.
void save(const Expansion& e, const std::string& path);
Expansion load(const std::string& path);

}  // namespace convprod

#endif
