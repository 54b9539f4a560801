#include "filament/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace filament {

SampledLoop::SampledLoop(ParamGrid grid, std::vector<Vec3> values) : grid_(grid) {
    assign(std::move(values));
}

void SampledLoop::assign(std::vector<Vec3> values) {
    if (static_cast<int>(values.size()) != grid_.n + 1)
        throw InvalidInput("SampledLoop: expected " + std::to_string(grid_.n + 1) +
                           " nodes, got " + std::to_string(values.size()));
    for (const auto& v : values)
        if (!all_finite(v)) throw InvalidInput("SampledLoop: non-finite node value");
    values.back() = values.front();
    values_ = std::move(values);
}

namespace {

double seminorm_over_pairs(const SampledLoop& loop, double gamma, SeminormMode mode) {
    const int n = loop.intervals();
    // One weight per node separation; |xi - eta| = d/n.
    std::vector<double> w(n + 1, 0.0);
    for (int d = 1; d <= n; ++d) w[d] = 1.0 / std::pow(static_cast<double>(d) / n, gamma);

    double best = 0.0;
    if (mode == SeminormMode::exact) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const double r = (loop[j] - loop[i]).norm() * w[j - i];
                best = std::max(best, r);
            }
    } else {
        for (int d = 1; d <= n; d *= 2)
            for (int i = 0; i + d <= n; ++i) {
                const double r = (loop[i + d] - loop[i]).norm() * w[d];
                best = std::max(best, r);
            }
    }
    return best;
}

}  // namespace

double holder_seminorm(const SampledLoop& loop, HolderExponent gamma, SeminormMode mode) {
    const int n = loop.intervals();
    for (const auto& v : loop.values())
        if (!all_finite(v)) throw InvalidInput("holder_seminorm: non-finite loop value");
    if (mode == SeminormMode::exact && n > 4096)
        throw InvalidInput("holder_seminorm: exact mode limited to n <= 4096, got " +
                           std::to_string(n));
    return seminorm_over_pairs(loop, gamma.gamma, mode);
}

double sup_norm(const SampledLoop& loop) {
    double best = 0.0;
    for (const auto& v : loop.values()) best = std::max(best, v.norm());
    return best;
}

double pair_seminorm_scan(int n, double exponent,
                          const std::function<double(int, int)>& pair_value,
                          SeminormMode mode) {
    std::vector<double> w(n + 1, 0.0);
    for (int d = 1; d <= n; ++d) w[d] = 1.0 / std::pow(static_cast<double>(d) / n, exponent);
    double best = 0.0;
    if (mode == SeminormMode::exact) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                best = std::max(best, pair_value(i, j) * w[j - i]);
    } else {
        for (int d = 1; d <= n; d *= 2)
            for (int i = 0; i + d <= n; ++i)
                best = std::max(best, pair_value(i, i + d) * w[d]);
    }
    return best;
}

}  // namespace filament
