#include "zetaccel/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace zetaccel {

TransformedSeries transform(Modulus c, int depth, SeqFn b) {
    if (depth < 1) throw std::invalid_argument("transform: depth must be >= 1");
    const int cv = c.value();
    auto memo = std::make_shared<MemoSeq>(std::move(b));
    SeqFn mfn = [memo](std::int64_t i) { return memo->at(i); };

    ComplexSum head;
    double head_mag = 0.0;
    double sign = 1.0;
    for (int j = 0; j < depth; ++j) {
        const double coef = sign / std::pow(static_cast<double>(cv), j + 1);
        for (int i = 0; i <= cv - 2; ++i) {
            const auto d = apply_difference_mag(c, j, mfn, i + 1);
            head.add(coef * static_cast<double>(cv + i) * d.value);
            head_mag += std::abs(coef) * (cv + i) * d.magnitude;
        }
        const auto dc = apply_difference_mag(c, j, mfn, cv);
        const double csq = static_cast<double>(cv - 1) * (cv - 1);
        head.add(-coef * csq * dc.value);
        head_mag += std::abs(coef) * csq * dc.magnitude;
        sign = -sign;
    }

    const double scale =
        (depth % 2 == 0 ? 1.0 : -1.0) / std::pow(static_cast<double>(cv), depth);
    auto term = [c, depth, scale, memo, mfn](std::int64_t n) -> TailTerm {
        const double coef = scale * static_cast<double>(series_coefficient(c, n));
        const auto d = apply_difference_mag(c, depth, mfn, n);
        return {coef * d.value, std::abs(coef) * d.magnitude};
    };
    return TransformedSeries(c, depth, head.value(), head_mag, std::move(term));
}

namespace {

// F^k b_n = sum_t (-1)^t C(k,t) b_{n+t}; Pascal row values are exact in
// double for every depth used here.
std::vector<double> classic_weights(int depth) {
    std::vector<double> row(static_cast<std::size_t>(depth) + 1, 0.0);
    row[0] = 1.0;
    for (int r = 1; r <= depth; ++r) {
        for (int t = r; t >= 1; --t) row[t] += row[t - 1];
    }
    for (int t = 1; t <= depth; t += 2) row[t] = -row[t];
    return row;
}

TailTerm apply_classic(const std::vector<double>& w, MemoSeq& memo,
                       std::int64_t n) {
    ComplexSum sum;
    double mag = 0.0;
    for (std::size_t t = 0; t < w.size(); ++t) {
        const Complex v = w[t] * memo.at(n + static_cast<std::int64_t>(t));
        sum.add(v);
        mag += std::abs(v);
    }
    return {sum.value(), mag};
}

}  // namespace

TransformedSeries classic_transform(int depth, SeqFn b) {
    if (depth < 1) throw std::invalid_argument("classic_transform: depth must be >= 1");
    auto memo = std::make_shared<MemoSeq>(std::move(b));

    ComplexSum head;
    double head_mag = 0.0;
    for (int j = 0; j < depth; ++j) {
        const auto w = classic_weights(j);
        const auto d = apply_classic(w, *memo, 1);
        const double coef = 1.0 / std::pow(2.0, j + 1);
        head.add(coef * d.value);
        head_mag += coef * d.magnitude;
    }

    const double scale = 1.0 / std::pow(2.0, depth);
    auto weights = std::make_shared<std::vector<double>>(classic_weights(depth));
    auto term = [scale, weights, memo](std::int64_t n) -> TailTerm {
        const double coef = (n % 2 == 1 ? scale : -scale);
        const auto d = apply_classic(*weights, *memo, n);
        return {coef * d.value, scale * d.magnitude};
    };
    return TransformedSeries(Modulus(2), depth, head.value(), head_mag,
                             std::move(term));
}

BlockedPartialSum sum_blocked(const TransformedSeries& ts, std::int64_t blocks) {
    if (blocks < 1) throw std::invalid_argument("sum_blocked: blocks must be >= 1");
    const std::int64_t cv = ts.modulus().value();
    const std::int64_t total = cv * blocks;
    const std::int64_t last_start = cv * (blocks - 1) + 1;

    ComplexSum sum;
    ComplexSum last_block;
    double mag = ts.head_magnitude();
    sum.add(ts.head());
    for (std::int64_t n = 1; n <= total; ++n) {
        const TailTerm t = ts.term(n);
        sum.add(t.value);
        mag += t.magnitude;
        if (n >= last_start) last_block.add(t.value);
    }
    return {ts.modulus(), blocks, sum.value(), last_block.value(), mag};
}

std::pair<Complex, Complex> telescope_check(Modulus c, int depth, Complex s,
                                            std::int64_t blocks) {
    if (blocks < 2) throw std::invalid_argument("telescope_check: blocks must be >= 2");
    const std::int64_t cv = c.value();

    ComplexSum lhs;
    for (std::int64_t n = cv + 1; n <= cv * blocks; ++n) {
        lhs.add(static_cast<double>(series_coefficient(c, n)) *
                difference_of_power(c, depth, n, s));
    }
    ComplexSum rhs;
    for (std::int64_t m = 2; m <= blocks; ++m) {
        rhs.add(difference_of_power(c, depth + 1, cv * m - cv, s));
    }
    return {lhs.value(), rhs.value()};
}

}  // namespace zetaccel
