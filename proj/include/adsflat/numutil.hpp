#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace adsflat {

// Adaptive Simpson quadrature with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

// Eigendecomposition of a symmetric 4x4 matrix by cyclic Jacobi rotations.
// Returns eigenvalues ascending; V columns are the matching eigenvectors.
struct Eigen4 {
    std::array<double, 4> values;
    std::array<std::array<double, 4>, 4> vectors;  // vectors[c] is column c
};
Eigen4 jacobi_eigen4(std::array<std::array<double, 4>, 4> A);

// Least-squares null direction of an m x 4 system (smallest right singular
// vector), via the normal matrix. Used for frame-alignment solves.
std::array<double, 4> null_direction(const std::vector<std::array<double, 4>>& rows);

}  // namespace adsflat
