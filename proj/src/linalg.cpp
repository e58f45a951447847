#include "ggmident/linalg.hpp"

#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "ggmident/errors.hpp"

namespace ggmident {

namespace {

void check_range(const IndexSet& labels, int dim, const char* what) {
    for (int label : labels) {
        if (label < 1 || label > dim)
            throw InvalidIndex(std::string(what) + " label " + std::to_string(label) +
                               " outside 1.." + std::to_string(dim));
    }
}

Eigen::MatrixXd take(const Eigen::MatrixXd& a, const IndexSet& rows, const IndexSet& cols) {
    Eigen::MatrixXd out(rows.size(), cols.size());
    for (int r = 0; r < rows.size(); ++r) {
        const int i = rows.members()[static_cast<std::size_t>(r)] - 1;
        for (int c = 0; c < cols.size(); ++c) {
            const int j = cols.members()[static_cast<std::size_t>(c)] - 1;
            out(r, c) = a(i, j);
        }
    }
    return out;
}

/// Cholesky of a conditioning block, with the singularity guard shared by
/// schur_complement and cond_cov.
Eigen::LLT<Eigen::MatrixXd> factor_conditioning_block(const Eigen::MatrixXd& block) {
    Eigen::LLT<Eigen::MatrixXd> llt(block);
    if (llt.info() != Eigen::Success)
        throw SingularConditioningSet("conditioning submatrix is not positive definite");
    if (llt.rcond() < kSingularRcond)
        throw SingularConditioningSet("conditioning submatrix is numerically singular (rcond " +
                                      std::to_string(llt.rcond()) + ")");
    return llt;
}

}  // namespace

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& a, const IndexSet& rows, const IndexSet& cols) {
    const int dim_r = static_cast<int>(a.rows());
    const int dim_c = static_cast<int>(a.cols());
    for (int label : rows)
        if (label < 1 || label > dim_r)
            throw InvalidIndex("row label " + std::to_string(label) + " outside 1.." +
                               std::to_string(dim_r));
    for (int label : cols)
        if (label < 1 || label > dim_c)
            throw InvalidIndex("column label " + std::to_string(label) + " outside 1.." +
                               std::to_string(dim_c));
    return take(a, rows, cols);
}

Eigen::MatrixXd submatrix(const SymMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    return submatrix(a.dense(), rows, cols);
}

SymMatrix schur_complement(const SymMatrix& a, const IndexSet& conditioned) {
    const int p = a.dim();
    check_range(conditioned, p, "conditioning");
    const IndexSet rest = conditioned.complement(p);
    if (rest.empty()) throw InvalidConditioningSet("conditioning set covers the whole index set");
    if (conditioned.empty()) return SymMatrix::from_dense(take(a.dense(), rest, rest));

    const Eigen::MatrixXd block = take(a.dense(), conditioned, conditioned);
    const auto llt = factor_conditioning_block(block);
    const Eigen::MatrixXd cross = take(a.dense(), conditioned, rest);  // A_{I I^c}
    const Eigen::MatrixXd reduced =
        take(a.dense(), rest, rest) - cross.transpose() * llt.solve(cross);
    return SymMatrix::from_dense(reduced);
}

double cond_cov(const SymMatrix& sigma, int u, int v, const IndexSet& s) {
    const int p = sigma.dim();
    if (u < 1 || u > p || v < 1 || v > p)
        throw InvalidIndex("node pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") outside 1.." + std::to_string(p));
    if (u == v) throw InvalidConditioningSet("conditional covariance requires distinct nodes");
    if (s.contains(u) || s.contains(v))
        throw InvalidConditioningSet("conditioning set contains an endpoint of (" +
                                     std::to_string(u) + "," + std::to_string(v) + ")");
    check_range(s, p, "conditioning");
    if (s.empty()) return sigma(u, v);

    const Eigen::MatrixXd block = take(sigma.dense(), s, s);
    const auto llt = factor_conditioning_block(block);
    const Eigen::VectorXd sigma_su = take(sigma.dense(), s, IndexSet{u});
    const Eigen::VectorXd sigma_sv = take(sigma.dense(), s, IndexSet{v});
    return sigma(u, v) - sigma_su.dot(llt.solve(sigma_sv));
}

SymMatrix invert_pd(const SymMatrix& a) {
    Eigen::LLT<Eigen::MatrixXd> llt(a.dense());
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("Cholesky factorization failed: matrix is not positive definite");
    Eigen::MatrixXd inv =
        llt.solve(Eigen::MatrixXd::Identity(a.dim(), a.dim()));
    // Solving against the identity is symmetric only up to rounding.
    return SymMatrix::from_dense(0.5 * (inv + inv.transpose()));
}

double default_epsilon_zero(const SymMatrix& sigma) {
    return kEpsilonZeroScale * sigma.max_diagonal();
}

std::pair<double, double> eigenvalue_range(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.dense(), Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    return {values.maxCoeff(), values.minCoeff()};
}

}  // namespace ggmident
