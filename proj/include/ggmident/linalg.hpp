#ifndef GGMIDENT_LINALG_HPP
#define GGMIDENT_LINALG_HPP

#include <Eigen/Dense>

#include "ggmident/index_set.hpp"
#include "ggmident/sym_matrix.hpp"

namespace ggmident {

/// A conditioning submatrix counts as singular when its estimated
/// reciprocal condition number falls below this.
inline constexpr double kSingularRcond = 1e-12;

/// Default relative scale for declaring an exact conditional covariance
/// zero: eps_zero = kEpsilonZeroScale * max_i Sigma_ii.
inline constexpr double kEpsilonZeroScale = 1e-8;

/// A_{rows, cols} with rows/columns in the given sorted orders.
/// Throws InvalidIndex when a label exceeds the matrix dimension.
Eigen::MatrixXd submatrix(const SymMatrix& a, const IndexSet& rows, const IndexSet& cols);
Eigen::MatrixXd submatrix(const Eigen::MatrixXd& a, const IndexSet& rows, const IndexSet& cols);

/// Schur complement of A_I in A: A_{I^c} - A_{I^c I} A_I^{-1} A_{I I^c}.
/// The result is indexed by the sorted members of I^c (position r of the
/// result corresponds to the r-th smallest label outside I). Throws
/// SingularConditioningSet when A_I cannot be factored or is
/// ill-conditioned beyond kSingularRcond.
SymMatrix schur_complement(const SymMatrix& a, const IndexSet& conditioned);

/// Conditional covariance Sigma(u, v | S) = Sigma_uv - Sigma_uS Sigma_S^{-1} Sigma_Sv.
/// An empty S contributes no correction term. Throws InvalidConditioningSet
/// when u == v or either endpoint lies in S, and SingularConditioningSet
/// when Sigma_S is numerically singular.
double cond_cov(const SymMatrix& sigma, int u, int v, const IndexSet& s);

/// Inverse of a symmetric positive definite matrix via Cholesky.
/// Throws NotPositiveDefinite when the factorization fails.
SymMatrix invert_pd(const SymMatrix& a);

/// 1e-8 times the largest diagonal entry: the default exact-oracle zero
/// threshold, relative to the matrix scale.
double default_epsilon_zero(const SymMatrix& sigma);

/// Extreme eigenvalues, for diagnostics.
std::pair<double, double> eigenvalue_range(const SymMatrix& a);

}  // namespace ggmident

#endif  // GGMIDENT_LINALG_HPP
