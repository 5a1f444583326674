#pragma once

#include <array>
#include <vector>

namespace tsol {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Eigen-decomposition of a symmetric 3x3 matrix by cyclic Jacobi rotations.
// Eigenvalues ascending; columns of vecs are the matching unit eigenvectors.
struct SymEigen3 {
    std::array<double, 3> values;
    Mat3 vecs;
};

SymEigen3 sym_eigen3(const Mat3& a);

/// Solves the square system a*x = b in place by Gaussian elimination with
/// partial pivoting. Returns false when a pivot degenerates.
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& b);

} // namespace tsol
