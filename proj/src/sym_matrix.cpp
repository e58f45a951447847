#include "ggmident/sym_matrix.hpp"

#include <cmath>
#include <string>

#include "ggmident/errors.hpp"

namespace ggmident {

SymMatrix::SymMatrix(int dim) {
    if (dim < 1) throw InvalidSpec("matrix dimension must be at least 1, got " + std::to_string(dim));
    data_ = Eigen::MatrixXd::Zero(dim, dim);
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    m.data_.setIdentity();
    return m;
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InvalidSpec("square matrix required, got " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * scale)
        throw InvalidSpec("matrix is not symmetric (max asymmetry " + std::to_string(asym) + ")");
    SymMatrix out(static_cast<int>(m.rows()));
    out.data_ = 0.5 * (m + m.transpose());
    return out;
}

double SymMatrix::operator()(int i, int j) const {
    const int p = dim();
    if (i < 1 || i > p || j < 1 || j > p)
        throw InvalidIndex("index (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside 1.." + std::to_string(p));
    return data_(i - 1, j - 1);
}

void SymMatrix::set(int i, int j, double value) {
    const int p = dim();
    if (i < 1 || i > p || j < 1 || j > p)
        throw InvalidIndex("index (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside 1.." + std::to_string(p));
    data_(i - 1, j - 1) = value;
    data_(j - 1, i - 1) = value;
}

double SymMatrix::max_diagonal() const { return data_.diagonal().maxCoeff(); }

bool SymMatrix::operator==(const SymMatrix& other) const { return data_ == other.data_; }

}  // namespace ggmident
