#pragma once

#include <cmath>
#include <complex>
#include <random>

namespace testutil {

using Complex = std::complex<double>;

inline bool close_abs(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool close_rel(Complex a, Complex b, double rel, double abs_floor = 0.0) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel * scale + abs_floor;
}

// Deterministic RNG for property tests; seeds are fixed per test site.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace testutil
