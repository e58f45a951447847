#ifndef GGMIDENT_IO_HPP
#define GGMIDENT_IO_HPP

#include <string>

#include <Eigen/Dense>

#include "ggmident/ci_oracle.hpp"
#include "ggmident/graph.hpp"
#include "ggmident/sym_matrix.hpp"

namespace ggmident {

// Plain-text formats. '#' starts a comment line in all of them; labels are
// 1-based.
//
//   matrix:  line 1 "p", then p rows of p reals (full symmetric matrix)
//   samples: line 1 "n p", then n rows of p reals
//   edges:   one "u v" pair per line, u < v

SymMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const SymMatrix& m);

struct SampleMatrix {
    Eigen::MatrixXd rows;  // n x p
    long n() const { return rows.rows(); }
    int p() const { return static_cast<int>(rows.cols()); }
};

SampleMatrix read_samples_file(const std::string& path);
void write_samples_file(const std::string& path, const Eigen::MatrixXd& rows);

/// Scatter matrix from sample rows; centering subtracts column means first
/// (off by default everywhere: the models are zero-mean).
ScatterData scatter_from_samples(const SampleMatrix& samples, bool center);

Graph read_edge_list(const std::string& path, int node_count);
void write_edge_list(const std::string& path, const Graph& g);

}  // namespace ggmident

#endif  // GGMIDENT_IO_HPP
