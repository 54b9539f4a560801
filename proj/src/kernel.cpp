#include "filament/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace filament {

namespace {

constexpr double kFourPi = 4.0 * M_PI;

// Cross-product symbol matrix M_ij = eps_{ijk} x^k.
inline Mat3 eps_contract(const Vec3& x) {
    Mat3 m;
    m << 0.0, x[2], -x[1],
        -x[2], 0.0, x[0],
        x[1], -x[0], 0.0;
    return m;
}

}  // namespace

KernelField::KernelField(double gamma_intensity, double mu_reg)
    : circulation(gamma_intensity), mu(mu_reg) {
    if (!(circulation >= 0.0) || !std::isfinite(circulation))
        throw InvalidInput("KernelField: circulation must be finite and >= 0");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw InvalidInput("KernelField: mu must be finite and > 0 (the mu = 0 kernel is singular)");
}

Mat3 KernelField::matrix(const Vec3& x) const {
    const double c = circulation / kFourPi;
    const double w = x.squaredNorm() + mu * mu;
    const double s = 1.0 / (w * std::sqrt(w));
    return (-c * s) * eps_contract(x);
}

Tensor3 KernelField::gradient(const Vec3& x) const {
    const double c = circulation / kFourPi;
    const double w = x.squaredNorm() + mu * mu;
    const double s = 1.0 / (w * std::sqrt(w));
    const double q5 = -3.0 * s / w;  // d_l s = x^l q5
    const Mat3 m = eps_contract(x);
    Tensor3 out;
    for (int l = 0; l < 3; ++l) {
        Vec3 el = Vec3::Zero();
        el[l] = 1.0;
        out[l] = -c * (s * eps_contract(el) + (q5 * x[l]) * m);
    }
    return out;
}

Tensor4 KernelField::second_gradient(const Vec3& x) const {
    const double c = circulation / kFourPi;
    const double w = x.squaredNorm() + mu * mu;
    const double s = 1.0 / (w * std::sqrt(w));
    const double q5 = -3.0 * s / w;
    const double q7 = 15.0 * s / (w * w);
    const Mat3 m = eps_contract(x);
    std::array<Mat3, 3> unit;
    for (int l = 0; l < 3; ++l) {
        Vec3 el = Vec3::Zero();
        el[l] = 1.0;
        unit[l] = eps_contract(el);
    }
    Tensor4 out;
    for (int l = 0; l < 3; ++l)
        for (int mm = 0; mm < 3; ++mm) {
            const double dlm = (l == mm) ? 1.0 : 0.0;
            out.m[l][mm] = -c * (q5 * x[mm] * unit[l] + q5 * x[l] * unit[mm] +
                                 (dlm * q5 + q7 * x[l] * x[mm]) * m);
        }
    return out;
}

namespace {

// Radial majorants for the entrywise norms |grad^n A| obtained from the
// closed-form derivatives and |x^1|+|x^2|+|x^3| <= sqrt(3) rho.
double radial_profile(int order, double c, double mu, double rho) {
    const double w = rho * rho + mu * mu;
    const double w32 = std::pow(w, -1.5);
    const double w52 = std::pow(w, -2.5);
    const double w72 = std::pow(w, -3.5);
    const double w92 = std::pow(w, -4.5);
    const double r3 = std::sqrt(3.0);
    switch (order) {
        case 0:
            return c * 2.0 * r3 * rho * w32;
        case 1:
            return c * (6.0 * w32 + 18.0 * rho * rho * w52);
        case 2:
            return c * r3 * (54.0 * rho * w52 + 90.0 * rho * rho * rho * w72);
        case 3:
            return c * (162.0 * w52 + 1350.0 * rho * rho * w72 +
                        1890.0 * rho * rho * rho * rho * w92);
        default:
            throw InvalidInput("derivative_sup_bound: order must be in 0..3");
    }
}

}  // namespace

double KernelField::derivative_sup_bound(int order) const {
    if (order < 0 || order > 3)
        throw InvalidInput("derivative_sup_bound: order must be in 0..3, got " +
                           std::to_string(order));
    const double c = circulation / kFourPi;
    // Coarse scan to bracket the maximizer, then golden section.
    const double hi = 10.0 * mu;
    const int scan = 512;
    double best_rho = 0.0, best = radial_profile(order, c, mu, 0.0);
    for (int i = 1; i <= scan; ++i) {
        const double rho = hi * i / scan;
        const double v = radial_profile(order, c, mu, rho);
        if (v > best) {
            best = v;
            best_rho = rho;
        }
    }
    double a = std::max(0.0, best_rho - hi / scan);
    double b = std::min(hi, best_rho + hi / scan);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    while ((b - a) > 1e-8 * std::max(1.0, best_rho)) {
        const double x1 = b - invphi * (b - a);
        const double x2 = a + invphi * (b - a);
        if (radial_profile(order, c, mu, x1) < radial_profile(order, c, mu, x2))
            a = x1;
        else
            b = x2;
    }
    return std::max(best, radial_profile(order, c, mu, 0.5 * (a + b)));
}

}  // namespace filament
