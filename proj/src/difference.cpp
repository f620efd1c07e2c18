#include "zetaccel/difference.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace zetaccel {

WeightVector::WeightVector(Modulus c, int depth) : c_(c), depth_(depth) {
    if (depth < 0) throw std::invalid_argument("WeightVector: depth must be >= 0");
    const int cv = c.value();
    if (depth == 0) {
        min_offset_ = 0;
        weights_ = {mpz_class(1)};
    } else {
        // Base weights 1, ..., 1, 1-c at offsets 1..c, convolved depth times.
        std::vector<mpz_class> base(cv, mpz_class(1));
        base[cv - 1] = mpz_class(1 - cv);

        std::vector<mpz_class> acc = base;
        for (int it = 1; it < depth; ++it) {
            std::vector<mpz_class> next(acc.size() + base.size() - 1, mpz_class(0));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                if (acc[i] == 0) continue;
                for (std::size_t j = 0; j < base.size(); ++j) {
                    next[i + j] += acc[i] * base[j];
                }
            }
            acc = std::move(next);
        }
        min_offset_ = depth;
        weights_ = std::move(acc);
    }
    weights_dbl_.reserve(weights_.size());
    for (const auto& w : weights_) weights_dbl_.push_back(w.get_d());
}

const mpz_class& WeightVector::at(std::int64_t offset) const {
    static const mpz_class zero(0);
    const std::int64_t idx = offset - min_offset_;
    if (idx < 0 || idx >= static_cast<std::int64_t>(weights_.size())) return zero;
    return weights_[static_cast<std::size_t>(idx)];
}

mpz_class WeightVector::weight_sum() const {
    mpz_class s = 0;
    for (const auto& w : weights_) s += w;
    return s;
}

mpz_class WeightVector::abs_weight_sum() const {
    mpz_class s = 0;
    for (const auto& w : weights_) s += abs(w);
    return s;
}

const WeightVector& weight_vector(Modulus c, int depth) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<WeightVector>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(c.value(), depth);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<WeightVector>(c, depth)).first;
    }
    return *it->second;
}

Complex apply_difference(Modulus c, int depth, const SeqFn& b, std::int64_t n) {
    const WeightVector& wv = weight_vector(c, depth);
    ComplexSum sum;
    std::int64_t offset = wv.min_offset();
    for (double w : wv.weights_dbl()) {
        if (w != 0.0) sum.add(w * b(n + offset));
        ++offset;
    }
    return sum.value();
}

DifferenceResult apply_difference_mag(Modulus c, int depth, const SeqFn& b,
                                      std::int64_t n) {
    const WeightVector& wv = weight_vector(c, depth);
    ComplexSum sum;
    double mag = 0.0;
    std::int64_t offset = wv.min_offset();
    for (double w : wv.weights_dbl()) {
        if (w != 0.0) {
            const Complex t = w * b(n + offset);
            sum.add(t);
            mag += std::abs(t);
        }
        ++offset;
    }
    return {sum.value(), mag};
}

Complex difference_of_power(Modulus c, int depth, std::int64_t n, Complex s) {
    if (n < 1) throw std::invalid_argument("difference_of_power: n must be >= 1");
    const WeightVector& wv = weight_vector(c, depth);
    ComplexSum sum;
    std::int64_t offset = wv.min_offset();
    for (double w : wv.weights_dbl()) {
        if (w != 0.0) sum.add(w * inverse_power(n + offset, s));
        ++offset;
    }
    return sum.value();
}

Complex rising_factorial(Complex s, int k) {
    if (k < 0) throw std::invalid_argument("rising_factorial: k must be >= 0");
    Complex v(1.0, 0.0);
    for (int j = 0; j < k; ++j) v *= s + static_cast<double>(j);
    return v;
}

double rising_factorial_derivative_bound(Complex s, int k) {
    // sum over j of prod_{l != j} |s + l|
    double total = 0.0;
    for (int j = 0; j < k; ++j) {
        double p = 1.0;
        for (int l = 0; l < k; ++l) {
            if (l != j) p *= std::abs(s + static_cast<double>(l));
        }
        total += p;
    }
    return total;
}

namespace {

double half_block_pow(Modulus c, int depth) {
    const double base = 0.5 * c.value() * (c.value() - 1);
    return std::pow(base, depth);
}

}  // namespace

double difference_bound(Modulus c, int depth, std::int64_t n, Complex s) {
    if (n < 1) throw std::invalid_argument("difference_bound: n must be >= 1");
    if (s.real() + depth < 0.0) {
        throw std::domain_error("difference_bound: requires Re(s) + k >= 0");
    }
    return std::abs(rising_factorial(s, depth)) * half_block_pow(c, depth) *
           std::pow(static_cast<double>(n), -(s.real() + depth));
}

double log_difference_bound(Modulus c, int depth, std::int64_t n, Complex s) {
    if (n < 1) throw std::invalid_argument("log_difference_bound: n must be >= 1");
    if (s.real() + depth < 0.0) {
        throw std::domain_error("log_difference_bound: requires Re(s) + k >= 0");
    }
    const double d1 = rising_factorial_derivative_bound(s, depth);
    const double pk = std::abs(rising_factorial(s, depth));
    const double reach = std::log(static_cast<double>(n + static_cast<std::int64_t>(c.value()) * depth));
    return half_block_pow(c, depth) *
           std::pow(static_cast<double>(n), -(s.real() + depth)) *
           (d1 + pk * reach);
}

}  // namespace zetaccel
