#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "filament/types.hpp"

namespace filament {

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Uniform parameter grid on [0,1] with n intervals, nodes xi_i = i/n.
struct ParamGrid {
    int n = 0;

    ParamGrid() = default;
    explicit ParamGrid(int intervals) : n(intervals) {
        if (n <= 0) throw InvalidInput("ParamGrid: number of intervals must be positive");
    }

    int nodes() const { return n + 1; }
    double xi(int i) const { return static_cast<double>(i) / n; }
    double spacing() const { return 1.0 / n; }

    bool operator==(const ParamGrid& o) const { return n == o.n; }
    bool operator!=(const ParamGrid& o) const { return n != o.n; }
};

// Closed curve in 3-space sampled on a uniform grid. Closure is enforced
// bitwise at construction: values[n] is overwritten with values[0].
class SampledLoop {
public:
    SampledLoop() = default;
    SampledLoop(ParamGrid grid, std::vector<Vec3> values);

    const ParamGrid& grid() const { return grid_; }
    int intervals() const { return grid_.n; }
    int nodes() const { return grid_.n + 1; }

    const Vec3& operator[](int i) const { return values_[i]; }
    const std::vector<Vec3>& values() const { return values_; }
    Vec3 increment(int i) const { return values_[i + 1] - values_[i]; }

    // Mutation re-enforces closure; keeps the type usable by the stepper
    // without reallocating.
    void assign(std::vector<Vec3> values);

private:
    ParamGrid grid_;
    std::vector<Vec3> values_;
};

// Regularity index gamma in (1/3, 1].
struct HolderExponent {
    double gamma = 1.0;

    HolderExponent() = default;
    explicit HolderExponent(double g) : gamma(g) {
        if (!(g > 1.0 / 3.0) || !(g <= 1.0))
            throw InvalidInput("HolderExponent: gamma must lie in (1/3, 1], got " +
                               std::to_string(g));
    }
};

enum class SeminormMode { exact, dyadic };

// sup over sampled pairs of |X_xi - X_eta| / |xi - eta|^gamma.
// exact: all O(n^2) pairs (n <= 4096); dyadic: pairs at separations 2^k only.
double holder_seminorm(const SampledLoop& loop, HolderExponent gamma,
                       SeminormMode mode = SeminormMode::exact);

// sup over grid of the Euclidean norm of the values.
double sup_norm(const SampledLoop& loop);

// 2gamma-seminorm scan of a per-pair matrix field given by a prefix table:
// pair value (i,j) = prefix[j] - prefix[i] - (X_i - X_0) ox (X_j - X_i) style
// callables are supplied by the caller; shared scan used by rough norms.
double pair_seminorm_scan(int n, double exponent,
                          const std::function<double(int, int)>& pair_value,
                          SeminormMode mode);

}  // namespace filament
