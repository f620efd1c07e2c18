#include "zetaccel/exact.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace zetaccel {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

mpq_class exact_difference(Modulus c, int depth, const ExactSeqFn& b,
                           std::int64_t n) {
    const WeightVector& wv = weight_vector(c, depth);
    mpq_class sum(0);
    std::int64_t offset = wv.min_offset();
    for (const mpz_class& w : wv.weights()) {
        if (w != 0) sum += mpq_class(w) * b(n + offset);
        ++offset;
    }
    return sum;
}

mpq_class exact_transform_head(Modulus c, int depth, const ExactSeqFn& b) {
    if (depth < 1) throw std::invalid_argument("exact_transform_head: depth >= 1");
    const long cv = c.value();
    mpq_class head(0);
    mpz_class cpow(cv);  // c^{j+1}
    int sign = 1;
    for (int j = 0; j < depth; ++j) {
        mpq_class inner(0);
        for (long i = 0; i <= cv - 2; ++i) {
            inner += mpq_class(cv + i) * exact_difference(c, j, b, i + 1);
        }
        inner -= mpq_class((cv - 1) * (cv - 1)) * exact_difference(c, j, b, cv);
        head += mpq_class(sign, cpow) * inner;
        cpow *= cv;
        sign = -sign;
    }
    head.canonicalize();
    return head;
}

namespace {

mpz_class int_pow(mpz_class base, std::int64_t e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

Rational zeta_neg_int(std::int64_t m, Modulus c) {
    if (m < 0) throw std::invalid_argument("zeta_neg_int: m must be >= 0");
    ExactSeqFn b = [m](std::int64_t n) { return mpq_class(int_pow(n, m)); };
    const mpq_class head = exact_transform_head(c, static_cast<int>(m) + 1, b);
    mpq_class factor(1);
    factor -= mpq_class(int_pow(c.value(), m + 1));
    mpq_class result = head / factor;
    result.canonicalize();
    return Rational(result);
}

Rational bernoulli_number(std::int64_t j) {
    if (j < 0) throw std::invalid_argument("bernoulli_number: j must be >= 0");
    std::vector<mpq_class> B(static_cast<std::size_t>(j) + 1);
    B[0] = 1;
    for (std::int64_t n = 1; n <= j; ++n) {
        // sum_{i=0}^{n} C(n+1, i) B_i = 0  solved for B_n
        mpq_class acc(0);
        mpz_class binom(1);  // C(n+1, i), starting at i = 0
        for (std::int64_t i = 0; i < n; ++i) {
            acc += mpq_class(binom) * B[static_cast<std::size_t>(i)];
            binom = binom * (n + 1 - i) / (i + 1);
        }
        mpq_class bn = -acc / mpq_class(binom);  // binom = C(n+1, n) = n+1
        bn.canonicalize();
        B[static_cast<std::size_t>(n)] = bn;
    }
    return Rational(B[static_cast<std::size_t>(j)]);
}

Rational bernoulli_oracle(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("bernoulli_oracle: m must be >= 0");
    mpq_class v = bernoulli_number(m + 1).value() / mpq_class(m + 1);
    if (m % 2 == 1) v = -v;
    v.canonicalize();
    return Rational(v);
}

Rational sondow_neg_int(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("sondow_neg_int: m must be >= 0");
    // F^j applied to b_n = n^m at n = 1: sum_t (-1)^t C(j,t) (1+t)^m
    mpq_class sum(0);
    mpz_class two_pow(2);  // 2^{j+1}
    for (std::int64_t j = 0; j <= m; ++j) {
        mpz_class diff(0);
        mpz_class binom(1);
        for (std::int64_t t = 0; t <= j; ++t) {
            const mpz_class term = binom * int_pow(1 + t, m);
            diff += (t % 2 == 0) ? term : -term;
            binom = binom * (j - t) / (t + 1);
        }
        mpq_class term(diff, two_pow);
        term.canonicalize();
        sum += term;
        two_pow *= 2;
    }
    mpq_class factor(1);
    factor -= mpq_class(int_pow(2, m + 1));
    mpq_class result = sum / factor;
    result.canonicalize();
    return Rational(result);
}

}  // namespace zetaccel
