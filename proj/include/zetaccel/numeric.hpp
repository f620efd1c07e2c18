#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace zetaccel {

using Complex = std::complex<double>;

/// Neumaier-compensated accumulator. The running compensation keeps the
/// accumulated roundoff at the epsilon^2 level regardless of term count,
/// and the result is a pure function of the insertion order.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Compensated accumulation of complex terms, component-wise.
class ComplexSum {
public:
    void add(const Complex& z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

/// n^{-s} for integer n >= 1 via exp(-s log n). log of a positive integer
/// is real, so no branch choice arises.
inline Complex inverse_power(std::int64_t n, const Complex& s) {
    return std::exp(-s * std::log(static_cast<double>(n)));
}

/// -n^{-s} log n, the termwise s-derivative of n^{-s}.
inline Complex inverse_power_dlog(std::int64_t n, const Complex& s) {
    const double ln = std::log(static_cast<double>(n));
    return -ln * std::exp(-s * ln);
}

}  // namespace zetaccel
