#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "zetaccel/numeric.hpp"

namespace zetaccel {

/// Block length c >= 2 of the c-periodic sign pattern 1, 1, ..., 1, 1-c.
class Modulus {
public:
    explicit Modulus(int c) : c_(c) {
        if (c < 2) throw std::invalid_argument("Modulus: c must be >= 2");
    }
    int value() const noexcept { return c_; }
    friend bool operator==(Modulus a, Modulus b) noexcept { return a.c_ == b.c_; }

private:
    int c_;
};

/// Coefficient of the c-periodic series: 1-c when c divides n, else 1.
inline std::int64_t series_coefficient(Modulus c, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("series_coefficient: n must be >= 1");
    return n % c.value() == 0 ? 1 - c.value() : 1;
}

using SeqFn = std::function<Complex(std::int64_t)>;

/// Exact integer weights of the depth-k difference operator:
/// applying the operator k times to a sequence b at index n equals
/// sum over offsets j of weight(j) * b(n + j).
///
/// Depth 0 is the identity (single weight 1 at offset 0). For k >= 1 the
/// nonzero offsets lie in [k, c*k]. Weights are kept as big integers so
/// deep stacks never overflow; a double mirror is kept for the numeric
/// paths (exact up to 2^53, which covers every |weight| <= (c-1)^k used
/// in floating evaluations).
class WeightVector {
public:
    WeightVector(Modulus c, int depth);

    Modulus modulus() const noexcept { return c_; }
    int depth() const noexcept { return depth_; }
    std::int64_t min_offset() const noexcept { return min_offset_; }
    std::int64_t max_offset() const noexcept {
        return min_offset_ + static_cast<std::int64_t>(weights_.size()) - 1;
    }
    const std::vector<mpz_class>& weights() const noexcept { return weights_; }
    const std::vector<double>& weights_dbl() const noexcept { return weights_dbl_; }

    /// Weight at an absolute offset; zero outside [min_offset, max_offset].
    const mpz_class& at(std::int64_t offset) const;

    mpz_class weight_sum() const;
    mpz_class abs_weight_sum() const;

private:
    Modulus c_;
    int depth_;
    std::int64_t min_offset_;
    std::vector<mpz_class> weights_;
    std::vector<double> weights_dbl_;
};

/// Memoized weight vector for (c, k). Safe for concurrent callers; the
/// returned reference stays valid for the program lifetime.
const WeightVector& weight_vector(Modulus c, int depth);

/// Depth-k difference of an arbitrary sequence at index n, accumulated in
/// ascending offset order with compensation. Requires b defined on
/// n .. n + c*k.
Complex apply_difference(Modulus c, int depth, const SeqFn& b, std::int64_t n);

/// Same, but also reports the magnitude volume sum |w_j * b(n+j)| that
/// entered the cancellation; used by the roundoff model.
struct DifferenceResult {
    Complex value;
    double magnitude;
};
DifferenceResult apply_difference_mag(Modulus c, int depth, const SeqFn& b,
                                      std::int64_t n);

/// Depth-k difference of the power sequence b_m = m^{-s} at index n.
Complex difference_of_power(Modulus c, int depth, std::int64_t n, Complex s);

/// Rising factorial s (s+1) ... (s+k-1); equals 1 for k = 0.
Complex rising_factorial(Complex s, int k);

/// |d/ds of the rising factorial|, bounded by sum_j prod_{l != j} |s+l|.
/// Computed directly as the product-sum, no divisions.
double rising_factorial_derivative_bound(Complex s, int k);

/// Upper bound for |depth-k difference of m^{-s} at m = n|:
///   |(s)_k| (c(c-1)/2)^k / n^{Re s + k}.
/// Valid for Re(s) + k >= 0; throws a domain error below that.
double difference_bound(Modulus c, int depth, std::int64_t n, Complex s);

/// Analogous bound for the log-weighted sequence m^{-s} log m:
///   (c(c-1)/2)^k n^{-(Re s + k)} [ D_k(s) + |(s)_k| log(n + c k) ],
/// where D_k is the rising-factorial derivative bound. Same validity region.
double log_difference_bound(Modulus c, int depth, std::int64_t n, Complex s);

}  // namespace zetaccel
