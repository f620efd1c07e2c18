#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <vector>

#include "zetaccel/difference.hpp"
#include "helpers.hpp"

using namespace zetaccel;
using testutil::Rng;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Roundoff allowance for assertions against exact-arithmetic bounds: the
// weighted sum is computed from values carrying ~1 ulp each, so the noise
// floor scales with the magnitude volume of the cancellation.
double noise_floor(Modulus c, int depth, std::int64_t n, Complex s) {
    const WeightVector& wv = weight_vector(c, depth);
    double mag = 0.0;
    std::int64_t off = wv.min_offset();
    for (double w : wv.weights_dbl()) {
        mag += std::abs(w) * std::pow(static_cast<double>(n + off), -s.real());
        ++off;
    }
    return 256.0 * kEps * mag;
}

std::map<std::int64_t, mpz_class> as_map(const WeightVector& wv) {
    std::map<std::int64_t, mpz_class> m;
    std::int64_t off = wv.min_offset();
    for (const auto& w : wv.weights()) {
        if (w != 0) m[off] = w;
        ++off;
    }
    return m;
}

}  // namespace

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(-3), std::invalid_argument);
    CHECK(Modulus(2).value() == 2);
}

TEST_CASE("series coefficient pattern") {
    CHECK(series_coefficient(Modulus(3), 6) == -2);
    CHECK(series_coefficient(Modulus(2), 1) == 1);
    CHECK(series_coefficient(Modulus(4), 8) == -3);
    CHECK(series_coefficient(Modulus(5), 7) == 1);
    CHECK_THROWS_AS(series_coefficient(Modulus(2), 0), std::invalid_argument);
}

TEST_CASE("weight vectors at small depth") {
    const auto w21 = as_map(weight_vector(Modulus(2), 1));
    CHECK(w21 == std::map<std::int64_t, mpz_class>{{1, 1}, {2, -1}});

    const auto w31 = as_map(weight_vector(Modulus(3), 1));
    CHECK(w31 == std::map<std::int64_t, mpz_class>{{1, 1}, {2, 1}, {3, -2}});

    const auto w32 = as_map(weight_vector(Modulus(3), 2));
    CHECK(w32 == std::map<std::int64_t, mpz_class>{
                     {2, 1}, {3, 2}, {4, -3}, {5, -4}, {6, 4}});

    const auto w0 = as_map(weight_vector(Modulus(5), 0));
    CHECK(w0 == std::map<std::int64_t, mpz_class>{{0, 1}});
}

TEST_CASE("zero sum and magnitude bounds") {
    for (int c = 2; c <= 8; ++c) {
        for (int k = 1; k <= 10; ++k) {
            const WeightVector& wv = weight_vector(Modulus(c), k);
            CHECK(wv.weight_sum() == 0);
            CHECK(wv.min_offset() == k);
            CHECK(wv.max_offset() == static_cast<std::int64_t>(c) * k);

            mpz_class linf_bound, l1_bound;
            mpz_ui_pow_ui(linf_bound.get_mpz_t(), c - 1, k);
            mpz_ui_pow_ui(l1_bound.get_mpz_t(), 2 * (c - 1), k);
            mpz_class linf = 0;
            for (const auto& w : wv.weights()) linf = std::max(linf, mpz_class(abs(w)));
            CHECK(linf <= linf_bound);
            CHECK(wv.abs_weight_sum() <= l1_bound);
        }
    }
}

TEST_CASE("convolution consistency") {
    for (int c = 2; c <= 6; ++c) {
        for (int k = 1; k <= 8; ++k) {
            const auto wk = as_map(weight_vector(Modulus(c), k));
            const auto w1 = as_map(weight_vector(Modulus(c), 1));
            std::map<std::int64_t, mpz_class> conv;
            for (const auto& [j1, v1] : wk) {
                for (const auto& [j2, v2] : w1) conv[j1 + j2] += v1 * v2;
            }
            std::erase_if(conv, [](const auto& kv) { return kv.second == 0; });
            CHECK(conv == as_map(weight_vector(Modulus(c), k + 1)));
        }
    }
}

TEST_CASE("apply difference examples") {
    SUBCASE("constants annihilated at depth 1") {
        const Complex v =
            apply_difference(Modulus(2), 1, [](std::int64_t) { return Complex(5.0); }, 3);
        CHECK(v == Complex(0.0));
    }
    SUBCASE("linear sequence annihilated at depth 2") {
        const Complex v = apply_difference(
            Modulus(3), 2, [](std::int64_t n) { return Complex(double(n)); }, 1);
        CHECK(v == Complex(0.0));
    }
    SUBCASE("inverse squares at depth 1") {
        // oracle: 2^{-2} + 3^{-2} - 2 * 4^{-2}
        const double expected = 0.25 + 1.0 / 9.0 - 2.0 * 0.0625;
        const Complex v = apply_difference(
            Modulus(3), 1,
            [](std::int64_t n) { return Complex(1.0 / (double(n) * double(n))); }, 1);
        CHECK(std::abs(v.real() - expected) < 1e-15);
        CHECK(v.imag() == 0.0);
    }
}

TEST_CASE("polynomial annihilation is exact in integer arithmetic") {
    for (int c = 2; c <= 6; ++c) {
        for (int m = 0; m <= 6; ++m) {
            for (int k = m + 1; k <= m + 2; ++k) {
                const WeightVector& wv = weight_vector(Modulus(c), k);
                for (std::int64_t n : {std::int64_t(1), std::int64_t(23), std::int64_t(50)}) {
                    mpz_class sum = 0;
                    std::int64_t off = wv.min_offset();
                    for (const auto& w : wv.weights()) {
                        mpz_class p;
                        mpz_ui_pow_ui(p.get_mpz_t(),
                                      static_cast<unsigned long>(n + off),
                                      static_cast<unsigned long>(m));
                        sum += w * p;
                        ++off;
                    }
                    CHECK(sum == 0);
                }
            }
        }
    }
}

TEST_CASE("polynomial annihilation in floating point") {
    for (int c = 2; c <= 6; ++c) {
        for (int m = 0; m <= 6; ++m) {
            const int k = m + 1;
            for (std::int64_t n : {std::int64_t(1), std::int64_t(50)}) {
                const Complex v = apply_difference(
                    Modulus(c), k,
                    [m](std::int64_t i) {
                        return Complex(std::pow(double(i), double(m)));
                    },
                    n);
                const double scale =
                    weight_vector(Modulus(c), k).abs_weight_sum().get_d() *
                    std::pow(double(n + c * k), double(m));
                CHECK(std::abs(v) <= 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("difference of powers examples") {
    SUBCASE("depth 0 is the plain power") {
        CHECK(difference_of_power(Modulus(2), 0, 4, Complex(2.0)).real() ==
              doctest::Approx(0.0625).epsilon(1e-15));
    }
    SUBCASE("degree-2 monomial killed at depth 3, exactly") {
        // integer values throughout, so the cancellation is exact in double
        const Complex v = difference_of_power(Modulus(3), 3, 5, Complex(-2.0));
        CHECK(v == Complex(0.0));
    }
    SUBCASE("depth 1 at s=1") {
        // oracle: 1/2 - 1/3
        const double expected = 0.5 - 1.0 / 3.0;
        const Complex v = difference_of_power(Modulus(2), 1, 1, Complex(1.0));
        CHECK(std::abs(v.real() - expected) < 1e-15);
    }
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(Complex(2.0), 3) == Complex(24.0));
    CHECK(rising_factorial(Complex(-7.3, 2.0), 0) == Complex(1.0));
    CHECK(rising_factorial(Complex(-2.0), 3) == Complex(0.0));
    CHECK(rising_factorial(Complex(0.5), 2) == Complex(0.75));
}

TEST_CASE("difference bound examples") {
    // oracle: |(s)_k| (c(c-1)/2)^k / n^{Re s + k} evaluated by hand
    CHECK(difference_bound(Modulus(2), 1, 10, Complex(2.0)) ==
          doctest::Approx(0.002).epsilon(1e-14));
    CHECK(difference_bound(Modulus(2), 0, 5, Complex(2.0)) ==
          doctest::Approx(0.04).epsilon(1e-14));
    // k = 0 bound is met with equality by the plain power
    CHECK(std::abs(difference_of_power(Modulus(2), 0, 5, Complex(2.0))) ==
          doctest::Approx(0.04).epsilon(1e-14));
    CHECK(difference_bound(Modulus(3), 2, 4, Complex(1.0)) ==
          doctest::Approx(0.28125).epsilon(1e-14));
    CHECK_THROWS_AS(difference_bound(Modulus(2), 1, 3, Complex(-1.5)),
                    std::domain_error);
}

TEST_CASE("bound property over random samples") {
    Rng rng(20240521);
    for (int trial = 0; trial < 1000; ++trial) {
        const int c = static_cast<int>(rng.uniform_int(2, 6));
        const int k = static_cast<int>(rng.uniform_int(0, 6));
        const std::int64_t n = rng.uniform_int(1, 100);
        const Complex s(rng.uniform(-double(k), 4.0), rng.uniform(-10.0, 10.0));
        const double lhs = std::abs(difference_of_power(Modulus(c), k, n, s));
        const double bound = difference_bound(Modulus(c), k, n, s);
        CHECK(lhs <= bound * (1.0 + 1e-12) + noise_floor(Modulus(c), k, n, s));
    }
}

TEST_CASE("log-weighted bound property") {
    Rng rng(777001);
    for (int trial = 0; trial < 400; ++trial) {
        const int c = static_cast<int>(rng.uniform_int(2, 5));
        const int k = static_cast<int>(rng.uniform_int(0, 5));
        const std::int64_t n = rng.uniform_int(1, 60);
        const Complex s(rng.uniform(-double(k), 4.0), rng.uniform(-8.0, 8.0));
        const Complex lhs = apply_difference(
            Modulus(c), k,
            [s](std::int64_t m) { return inverse_power_dlog(m, s); }, n);
        const double bound = log_difference_bound(Modulus(c), k, n, s);
        const double floor =
            noise_floor(Modulus(c), k, n, s) * std::log(double(n + c * k) + 1.0);
        CHECK(std::abs(lhs) <= bound * (1.0 + 1e-12) + floor);
    }
}

TEST_CASE("depth-1 closed form: single integral") {
    // D n^{-s} = sum_{i<c} [(n+i)^{-s} - (n+c)^{-s}], which is (s)_1 J_1
    // with J_1 integrated in closed form.
    Rng rng(31415);
    for (int trial = 0; trial < 200; ++trial) {
        const int c = static_cast<int>(rng.uniform_int(2, 6));
        const std::int64_t n = rng.uniform_int(1, 50);
        const Complex s(rng.uniform(0.25, 4.0), rng.uniform(-3.0, 3.0));
        const Complex lhs = difference_of_power(Modulus(c), 1, n, s);
        ComplexSum rhs;
        for (int i = 1; i <= c - 1; ++i) {
            rhs.add(inverse_power(n + i, s) - inverse_power(n + c, s));
        }
        CHECK(testutil::close_rel(lhs, rhs.value(), 1e-12, 1e-16));
    }
}

TEST_CASE("depth-2 closed form: iterated integral oracle") {
    // D^2 n^{-s} = (s)_2 J_2; the double integral evaluates in closed form
    // through the antiderivative y^{-s} / (s (s+1)).
    for (int c : {2, 3, 4}) {
        for (std::int64_t n : {std::int64_t(1), std::int64_t(5), std::int64_t(20)}) {
            for (Complex s : {Complex(2.0), Complex(0.75), Complex(1.5, 1.0)}) {
                const Complex lhs = difference_of_power(Modulus(c), 2, n, s);
                ComplexSum j2;
                for (int i1 = 1; i1 <= c - 1; ++i1) {
                    for (int i2 = 1; i2 <= c - 1; ++i2) {
                        j2.add(inverse_power(n + i1 + i2, s) -
                               inverse_power(n + i1 + c, s) -
                               inverse_power(n + c + i2, s) +
                               inverse_power(n + 2 * c, s));
                    }
                }
                CHECK(testutil::close_rel(lhs, j2.value(), 1e-11, 1e-15));
            }
        }
    }
}

TEST_CASE("memoized weight vectors are stable under concurrent access") {
    std::vector<std::future<mpz_class>> futs;
    for (int t = 0; t < 8; ++t) {
        futs.push_back(std::async(std::launch::async, [t] {
            mpz_class acc = 0;
            for (int k = 0; k <= 12; ++k) {
                const WeightVector& wv = weight_vector(Modulus(2 + t % 3), k);
                acc += wv.abs_weight_sum();
            }
            return acc;
        }));
    }
    std::vector<mpz_class> results;
    for (auto& f : futs) results.push_back(f.get());
    CHECK(results[0] == results[3]);  // same modulus sequence -> same totals
    CHECK(results[1] == results[4]);
    CHECK(results[2] == results[5]);
}
