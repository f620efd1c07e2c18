#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "zetaccel/difference.hpp"

namespace zetaccel {

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);
    static Rational integer(long v) { return Rational(mpz_class(v), mpz_class(1)); }

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.q_ == b.q_;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using ExactSeqFn = std::function<mpq_class(std::int64_t)>;

/// Depth-k difference of an exact-rational sequence, using the integer
/// weight vector directly.
mpq_class exact_difference(Modulus c, int depth, const ExactSeqFn& b,
                           std::int64_t n);

/// The finite transform head evaluated entirely in rational arithmetic.
mpq_class exact_transform_head(Modulus c, int depth, const ExactSeqFn& b);

/// zeta(-m) through the depth-(m+1) head with b_n = n^m: the transformed
/// tail vanishes identically at nonpositive integer arguments, so the head
/// divided by (1 - c^{m+1}) is the exact value. Independent of c.
Rational zeta_neg_int(std::int64_t m, Modulus c);

/// Bernoulli number B_j under the convention B_1 = -1/2, via the
/// recurrence sum_{i=0}^{j} C(j+1, i) B_i = 0, B_0 = 1.
Rational bernoulli_number(std::int64_t j);

/// Independent oracle: zeta(-m) = (-1)^m B_{m+1} / (m+1). For m >= 1 the
/// sign collapses to -B_{m+1}/(m+1); at m = 0 it yields B_1 = -1/2.
Rational bernoulli_oracle(std::int64_t m);

/// Sondow's alternating-series formula: zeta(-m) =
/// (1 - 2^{m+1})^{-1} sum_{j=0}^{m} F^j 1^m / 2^{j+1}, with the classical
/// operator F b_n = b_n - b_{n+1}. Exact arithmetic throughout.
Rational sondow_neg_int(std::int64_t m);

}  // namespace zetaccel
