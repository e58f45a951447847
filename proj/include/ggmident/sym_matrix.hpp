#ifndef GGMIDENT_SYM_MATRIX_HPP
#define GGMIDENT_SYM_MATRIX_HPP

#include <Eigen/Dense>

#include "ggmident/index_set.hpp"

namespace ggmident {

/// A dense symmetric p x p matrix with 1-based element access, the value
/// type behind covariance, precision and scatter matrices. Symmetry holds
/// exactly by construction: set() writes both triangles and from_dense()
/// averages the input with its transpose after checking the asymmetry is
/// within rounding noise.
class SymMatrix {
public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit SymMatrix(int dim);

    static SymMatrix identity(int dim);

    /// Validates near-symmetry, then stores (m + m^T) / 2.
    static SymMatrix from_dense(const Eigen::MatrixXd& m);

    int dim() const { return static_cast<int>(data_.rows()); }

    /// 1-based access; throws InvalidIndex when out of range.
    double operator()(int i, int j) const;

    /// Sets entries (i, j) and (j, i); 1-based.
    void set(int i, int j, double value);

    double max_diagonal() const;

    /// The underlying 0-based dense storage.
    const Eigen::MatrixXd& dense() const { return data_; }

    bool operator==(const SymMatrix& other) const;

private:
    Eigen::MatrixXd data_;
};

}  // namespace ggmident

#endif  // GGMIDENT_SYM_MATRIX_HPP
