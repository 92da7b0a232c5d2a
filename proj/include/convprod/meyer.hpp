#ifndef CONVPROD_MEYER_HPP
#define CONVPROD_MEYER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "convprod/tvir.hpp"

namespace convprod {

// Double wavelet expansion of the TVIR keeping the coarse m1 x m2 coefficient
// block c[lambda][mu] = <T, psi_lambda x psi_mu> (quadrature inner product,
// atoms quadrature-orthonormal). Exactly m1*m2 stored reals.
struct MeyerRep {
  Grid grid;
  int alpha = 2;
  int m1 = 0;
  int m2 = 0;
  std::vector<double> c;  // row-major m1 x m2

  double at(int l, int u) const { return c[static_cast<std::size_t>(l) * m2 + u]; }
  double& at(int l, int u) { return c[static_cast<std::size_t>(l) * m2 + u]; }
};

// m1, m2 powers of two <= n; alpha = max(r,s)+1 vanishing moments.
MeyerRep meyer_expand(const Tvir& tvir, int m1, int m2, int alpha);

// Fast application: precompute c~_mu = sum_lambda c[lambda][mu] psi_lambda,
// then (1/n) sum_mu c~_mu # (psi_mu . u) with sectioned convolutions.
Signal meyer_apply(const MeyerRep& rep, const Signal& u);

// Dense TVIR of the retained block (testing / error evaluation).
Tvir meyer_materialize(const MeyerRep& rep);

std::int64_t meyer_storage_count(const MeyerRep& rep);

// Sectioned-convolution cost model of the fast-apply form,
// sum_mu (|c~_mu| + |psi_mu|) log2(min + 1).
double meyer_flop_estimate(const MeyerRep& rep);

// Versioned JSON manifest {version, n, alpha, m1, m2, coeffs}.
void meyer_save(const MeyerRep& rep, const std::string& path);
MeyerRep meyer_load(const std::string& path);

}  // namespace convprod

#endif
