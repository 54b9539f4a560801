#pragma once

#include "filament/geometry.hpp"
#include "filament/types.hpp"

namespace filament {

// Regularized Biot-Savart (Rosenhead) matrix kernel
//   A^{ij}(x) = -(circulation / 4 pi) eps_{ijk} x^k (|x|^2 + mu^2)^{-3/2}.
// mu > 0 is required; the unregularized kernel is singular.
struct KernelField {
    double circulation = 1.0;  // Gamma > 0
    double mu = 1.0;           // regularization length > 0

    KernelField() = default;
    KernelField(double gamma_intensity, double mu_reg);

    // A(x), antisymmetric 3x3 matrix, smooth for all finite x.
    Mat3 matrix(const Vec3& x) const;

    // d_l A^{ij}(x) in closed form; result(i,j,l).
    Tensor3 gradient(const Vec3& x) const;

    // d_m d_l A^{ij}(x) in closed form; result(i,j,l,m).
    Tensor4 second_gradient(const Vec3& x) const;

    // Rigorous upper bound on sup_x |grad^order A(x)| (entrywise tensor
    // norm), order in 0..3, from a radial majorant maximized by golden
    // section to relative tolerance 1e-8. Used by step/horizon heuristics.
    double derivative_sup_bound(int order) const;
};

}  // namespace filament
