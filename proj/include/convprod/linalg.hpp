#ifndef CONVPROD_LINALG_HPP
#define CONVPROD_LINALG_HPP

#include <vector>

namespace convprod {

// Dense m x m LU factorization with partial pivoting.
struct LuFactor {
  int m = 0;
  std::vector<double> lu;   // row-major packed L\U
  std::vector<int> pivot;   // row permutation
  bool singular = false;
  double min_pivot = 0.0;
  double max_pivot = 0.0;
};

LuFactor lu_factor(std::vector<double> a, int m);
// Solves A x = b in place; factor must not be singular.
void lu_solve(const LuFactor& f, std::vector<double>& b);

// Deterministic one-sided Jacobi SVD of a square matrix, A = U S V^T with
// s nonincreasing, plain-orthonormal U and V. Sign fix: the first entry of
// each right vector with magnitude above 1e-10 of its max is positive.
struct SvdResult {
  int n = 0;
  std::vector<double> s;  // singular values, nonincreasing
  std::vector<double> u;  // column-major n*n
  std::vector<double> v;  // column-major n*n
};

SvdResult jacobi_svd(const std::vector<double>& a_rowmajor, int n);

// Singular values only (same sweep, vectors discarded).
std::vector<double> singular_values(const std::vector<double>& a_rowmajor,
                                    int n);

// Classical Jacobi eigendecomposition of a symmetric m x m matrix,
// A = Q diag(values) Q^T, eigenvalues nonincreasing.
struct SymEig {
  int m = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // column-major eigenvectors
};

SymEig jacobi_sym_eig(std::vector<double> a_rowmajor, int m);

// Minimum-norm solution of the SPD-or-singular Gram system G x = b:
// eigenvalues below rel_threshold * lambda_max are truncated.
void gram_minnorm_solve(const std::vector<double>& gram, int m,
                        std::vector<double>& b,
                        double rel_threshold = 1e-13);

}  // namespace convprod

#endif
