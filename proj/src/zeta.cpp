#include "zetaccel/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetaccel/transform.hpp"

namespace zetaccel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNoiseFactor = 8.0;       // per-term evaluation noise allowance
constexpr std::int64_t kMaxBlocks = std::int64_t(1) << 22;
constexpr double kEtaZeroThreshold = 1e-3;  // modulus switch near eta-factor zeros

double half_block(Modulus c) { return 0.5 * c.value() * (c.value() - 1); }

void validate_plan(const EvalPlan& plan) {
    if (plan.blocks < 1) throw std::invalid_argument("EvalPlan: blocks must be >= 1");
    if (plan.depth < 0) throw std::invalid_argument("EvalPlan: depth must be >= 0");
    if (!(plan.tol > 0.0)) throw std::invalid_argument("EvalPlan: tol must be > 0");
}

void check_region(Complex s, int depth) {
    const double sigma = s.real();
    if (depth == 0) {
        if (!(sigma > 1.0))
            throw region_error("depth 0 requires Re(s) > 1");
    } else if (!(sigma > 1.0 - depth)) {
        throw region_error("depth k requires Re(s) > 1 - k");
    }
}

bool conditional_regime(Complex s, int depth) {
    return depth >= 1 && s.real() <= 1.0 - depth + 0.5;
}

// Upper estimate of sum_{n=1}^{M} (n + shift)^{-sigma}; planning use only.
double power_sum_upper(double sigma, double shift, double M) {
    if (M < 1.0) return 0.0;
    auto integral = [&](double a, double b) {
        if (sigma == 1.0) return std::log((b + shift) / (a + shift));
        return (std::pow(b + shift, 1.0 - sigma) - std::pow(a + shift, 1.0 - sigma)) /
               (1.0 - sigma);
    };
    if (sigma >= 0.0) return std::pow(1.0 + shift, -sigma) + integral(1.0, M);
    return integral(1.0, M + 1.0);
}

// Modeled magnitude volume of a depth-k blocked evaluation (head + tail);
// multiplied by kNoiseFactor * eps it approximates the roundoff floor.
double magnitude_model(Modulus c, int depth, std::int64_t blocks, double sigma,
                       bool log_weighted) {
    const double cv = c.value();
    const double cn = static_cast<double>(blocks) * cv;
    double tail = (cv - 1.0) * std::pow(2.0 * (cv - 1.0) / cv, depth) *
                  power_sum_upper(sigma, cv * depth, cn);
    double head = 0.0;
    for (int j = 0; j < depth; ++j) {
        head += 3.0 * cv * cv * std::pow(2.0 * (cv - 1.0), j) /
                std::pow(cv, j + 1) *
                std::max(1.0, std::pow(cv * (1.0 + j), -sigma));
    }
    if (log_weighted) {
        const double reach = std::log(cv * (blocks + depth) + 1.0);
        tail *= reach;
        head *= std::log(cv * (1.0 + depth)) + 1.0;
    }
    return tail + head;
}

// Smallest N in [1, kMaxBlocks] with bound(N) <= target, or 0 when the cap
// cannot meet it. bound must be non-increasing in N.
template <typename BoundFn>
std::int64_t smallest_blocks(const BoundFn& bound, double target) {
    if (bound(std::int64_t(1)) <= target) return 1;
    std::int64_t lo = 1, hi = 2;
    while (hi < kMaxBlocks && bound(hi) > target) {
        lo = hi;
        hi *= 2;
    }
    if (bound(std::min(hi, kMaxBlocks)) > target) return 0;
    hi = std::min(hi, kMaxBlocks);
    while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (bound(mid) <= target) hi = mid;
        else lo = mid;
    }
    return hi;
}

struct PlanSearchResult {
    int depth = 0;
    std::int64_t blocks = 0;
    double est_model = std::numeric_limits<double>::infinity();
};

// Walk depths upward from k_min: deeper operators shrink the block count
// (and with it the accumulated roundoff) at the cost of a larger weight
// stack. Stop at the first depth whose modeled noise fits the share, else
// keep the best-modeled cell.
template <typename BoundFn>
PlanSearchResult search_plan(Modulus c, int k_min, Complex s, double target_trunc,
                             double target_noise, bool log_weighted,
                             const BoundFn& bound_at) {
    PlanSearchResult best;
    for (int k = k_min; k <= k_min + 32; ++k) {
        auto bound = [&](std::int64_t n) { return bound_at(k, n); };
        const std::int64_t n = smallest_blocks(bound, target_trunc);
        if (n == 0) continue;
        const double noise = kNoiseFactor * kEps *
                             magnitude_model(c, k, n, s.real(), log_weighted);
        const double est = bound(n) + noise;
        if (noise <= target_noise) return {k, n, est};
        if (est < best.est_model) best = {k, n, est};
    }
    return best;
}

}  // namespace

Complex eta_factor(Modulus c, Complex s) {
    return 1.0 - std::exp((1.0 - s) * std::log(static_cast<double>(c.value())));
}

double zeta_c_truncation_bound(Modulus c, int depth, std::int64_t blocks,
                               Complex s) {
    const double sigma = s.real();
    const double cv = c.value();
    const double n = static_cast<double>(blocks);
    if (depth == 0) {
        if (!(sigma > 1.0))
            throw region_error("truncation bound at depth 0 requires Re(s) > 1");
        return (cv - 1.0) * std::pow(cv * n, 1.0 - sigma) / (sigma - 1.0);
    }
    const double p = sigma + depth + 1;
    if (!(p > 1.0))
        throw region_error("truncation bound requires Re(s) + k > 0");
    const double coef = std::pow(cv, -depth) *
                        std::abs(rising_factorial(s, depth + 1)) *
                        std::pow(half_block(c), depth + 1) * std::pow(cv, -p);
    return coef * (std::pow(n, -p) + std::pow(n, 1.0 - p) / (p - 1.0));
}

double derivative_truncation_bound(Modulus c, int depth, std::int64_t blocks,
                                   Complex s) {
    const double sigma = s.real();
    const double cv = c.value();
    const double n = static_cast<double>(blocks);
    const double p = sigma + depth + 1;
    if (!(p > 1.0))
        throw region_error("derivative truncation bound requires Re(s) + k > 0");
    const double pre = std::pow(cv, -depth) * std::pow(half_block(c), depth + 1) *
                       std::pow(cv, -p);
    const double m1 = rising_factorial_derivative_bound(s, depth + 1);
    const double pk = std::abs(rising_factorial(s, depth + 1));
    const double ln_n = std::log(n);
    const double tail_plain = std::pow(n, -p) + std::pow(n, 1.0 - p) / (p - 1.0);
    const double tail_log =
        std::pow(n, -p) * ln_n +
        std::pow(n, 1.0 - p) * (ln_n / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0)));
    const double a = m1 + pk * std::log(cv * (2.0 + depth));
    return pre * (a * tail_plain + pk * tail_log);
}

SeriesEvaluation zeta_c(Complex s, const EvalPlan& plan) {
    validate_plan(plan);
    check_region(s, plan.depth);
    const Modulus c = plan.c;
    const std::int64_t cv = c.value();

    Complex value;
    double magnitude = 0.0;
    if (plan.depth == 0) {
        ComplexSum sum;
        for (std::int64_t n = 1; n <= cv * plan.blocks; ++n) {
            const Complex t =
                static_cast<double>(series_coefficient(c, n)) * inverse_power(n, s);
            sum.add(t);
            magnitude += std::abs(t);
        }
        value = sum.value();
    } else {
        TransformedSeries ts =
            transform(c, plan.depth, [s](std::int64_t n) { return inverse_power(n, s); });
        const BlockedPartialSum ps = sum_blocked(ts, plan.blocks);
        value = ps.value;
        magnitude = ps.magnitude;
    }

    const double trunc = zeta_c_truncation_bound(c, plan.depth, plan.blocks, s);
    const double noise = kNoiseFactor * kEps * magnitude;
    return {value,          trunc + noise, trunc, plan, cv * plan.blocks,
            conditional_regime(s, plan.depth)};
}

EvalPlan plan_heuristic_for(Modulus c, Complex s, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("plan_heuristic: tol must be > 0");
    if (s == Complex(1.0, 0.0)) throw pole_error("pole at s=1");

    const double fac = std::abs(eta_factor(c, s));
    const int k_min =
        std::max(1, static_cast<int>(std::ceil(1.0 - s.real()))) + 2;
    const double target = 0.25 * tol * fac;

    const PlanSearchResult r = search_plan(
        c, k_min, s, target, target, /*log_weighted=*/false,
        [&](int k, std::int64_t n) { return zeta_c_truncation_bound(c, k, n, s); });
    if (r.blocks == 0)
        throw region_error("plan_heuristic: tolerance not reachable within block cap");
    return {c, r.depth, r.blocks, tol};
}

EvalPlan plan_heuristic(Complex s, double tol) {
    if (s == Complex(1.0, 0.0)) throw pole_error("pole at s=1");
    const Modulus c{std::abs(eta_factor(Modulus(2), s)) < kEtaZeroThreshold ? 3 : 2};
    return plan_heuristic_for(c, s, tol);
}

std::int64_t blocks_for_target(Modulus c, int depth, Complex s, double target) {
    if (!(target > 0.0)) return 0;
    return smallest_blocks(
        [&](std::int64_t n) { return zeta_c_truncation_bound(c, depth, n, s); },
        target);
}

SeriesEvaluation zeta_with_plan(Complex s, const EvalPlan& plan) {
    if (s == Complex(1.0, 0.0)) throw pole_error("pole at s=1");
    const Complex den = eta_factor(plan.c, s);
    if (std::abs(den) < 1e-12)
        throw pole_error("eta factor vanishes at this s for the chosen modulus");
    SeriesEvaluation ev = zeta_c(s, plan);
    ev.value /= den;
    ev.est_error = ev.est_error / std::abs(den) + 4.0 * kEps * std::abs(ev.value);
    ev.truncation /= std::abs(den);
    return ev;
}

SeriesEvaluation zeta(Complex s, double tol) {
    return zeta_with_plan(s, plan_heuristic(s, tol));
}

Complex k1_derivative_prefix(Modulus c, Complex s) {
    const std::int64_t cv = c.value();
    ComplexSum sum;
    for (std::int64_t i = 2; i <= cv - 1; ++i) {
        sum.add(static_cast<double>(cv + i - 1) * inverse_power(i, s) *
                std::log(static_cast<double>(i)));
    }
    const double csq = static_cast<double>((cv - 1) * (cv - 1));
    sum.add(-csq * inverse_power(cv, s) * std::log(static_cast<double>(cv)));
    return -sum.value() / static_cast<double>(cv);
}

Complex k1_derivative_inner(Modulus c, Complex s, std::int64_t n) {
    const std::int64_t cv = c.value();
    ComplexSum sum;
    for (std::int64_t i = 1; i <= cv; ++i) {
        sum.add(static_cast<double>(series_coefficient(c, i)) *
                inverse_power(n + i, s) * std::log(static_cast<double>(n + i)));
    }
    return static_cast<double>(series_coefficient(c, n)) * sum.value();
}

Complex zeta_c_derivative_series(Complex s, Modulus c, std::int64_t blocks) {
    if (!(s.real() > 0.0))
        throw region_error("derivative series requires Re(s) > 0");
    if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
    ComplexSum sum;
    for (std::int64_t n = 1; n <= c.value() * blocks; ++n) {
        sum.add(static_cast<double>(series_coefficient(c, n)) *
                inverse_power_dlog(n, s));
    }
    return sum.value();
}

Complex zeta_c_derivative_k1(Complex s, Modulus c, std::int64_t blocks) {
    if (!(s.real() > -1.0))
        throw region_error("depth-1 derivative requires Re(s) > -1");
    if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
    ComplexSum sum;
    for (std::int64_t n = 1; n <= c.value() * blocks; ++n) {
        sum.add(k1_derivative_inner(c, s, n));
    }
    return k1_derivative_prefix(c, s) + sum.value() / static_cast<double>(c.value());
}

SeriesEvaluation zeta_c_derivative(Complex s, const EvalPlan& plan) {
    validate_plan(plan);
    if (plan.depth < 1)
        throw std::invalid_argument("zeta_c_derivative: depth must be >= 1");
    check_region(s, plan.depth);

    TransformedSeries ts = transform(
        plan.c, plan.depth, [s](std::int64_t n) { return inverse_power_dlog(n, s); });
    const BlockedPartialSum ps = sum_blocked(ts, plan.blocks);

    const double trunc =
        derivative_truncation_bound(plan.c, plan.depth, plan.blocks, s);
    const double noise = kNoiseFactor * kEps * ps.magnitude;
    return {ps.value,      trunc + noise,
            trunc,         plan,
            plan.c.value() * plan.blocks, conditional_regime(s, plan.depth)};
}

EvalPlan derivative_plan(Complex s, Modulus c, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("derivative_plan: tol must be > 0");
    const int k_min =
        std::max(1, static_cast<int>(std::ceil(1.0 - s.real()))) + 2;
    const double target = 0.5 * tol;

    const PlanSearchResult r =
        search_plan(c, k_min, s, target, target, /*log_weighted=*/true,
                    [&](int k, std::int64_t n) {
                        return derivative_truncation_bound(c, k, n, s);
                    });
    if (r.blocks == 0)
        throw region_error("derivative_plan: tolerance not reachable within block cap");
    return {c, r.depth, r.blocks, tol};
}

}  // namespace zetaccel
