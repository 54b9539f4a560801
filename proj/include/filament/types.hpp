#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>

namespace filament {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Rank-3 tensor T[l](i,j), used for first kernel derivatives d_l A^{ij}
// and for Gubinelli derivatives of matrix-valued controlled paths.
struct Tensor3 {
    std::array<Mat3, 3> m;

    Tensor3() { m[0].setZero(); m[1].setZero(); m[2].setZero(); }

    Mat3& operator[](int l) { return m[l]; }
    const Mat3& operator[](int l) const { return m[l]; }

    double operator()(int i, int j, int l) const { return m[l](i, j); }
    double& operator()(int i, int j, int l) { return m[l](i, j); }

    Tensor3& operator+=(const Tensor3& o) {
        for (int l = 0; l < 3; ++l) m[l] += o.m[l];
        return *this;
    }
    Tensor3 operator*(double c) const {
        Tensor3 r;
        for (int l = 0; l < 3; ++l) r.m[l] = m[l] * c;
        return r;
    }
    Tensor3 operator-() const { return *this * -1.0; }
};

// Rank-4 tensor T(i,j,l,m) = d_m d_l A^{ij}.
struct Tensor4 {
    std::array<std::array<Mat3, 3>, 3> m;  // m[l][mm](i,j)

    Tensor4() {
        for (auto& row : m)
            for (auto& e : row) e.setZero();
    }
    double operator()(int i, int j, int l, int mm) const { return m[l][mm](i, j); }
    double& operator()(int i, int j, int l, int mm) { return m[l][mm](i, j); }
};

// Entrywise tensor norm |M| = sum of absolute values of all components.
// Used for matrices and higher tensors in all seminorm estimates; points
// and increments in 3-space use the Euclidean norm.
inline double entry_norm(const Mat3& a) { return a.cwiseAbs().sum(); }

inline double entry_norm(const Tensor3& t) {
    return entry_norm(t[0]) + entry_norm(t[1]) + entry_norm(t[2]);
}

inline double entry_norm(const Tensor4& t) {
    double s = 0;
    for (int l = 0; l < 3; ++l)
        for (int mm = 0; mm < 3; ++mm) s += entry_norm(t.m[l][mm]);
    return s;
}

// Completely antisymmetric symbol, eps(0,1,2) = +1.
inline constexpr double levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1.0;
    return -1.0;
}

inline bool all_finite(const Vec3& v) {
    return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

inline bool all_finite(const Mat3& a) { return a.allFinite(); }

}  // namespace filament
