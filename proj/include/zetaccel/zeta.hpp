#pragma once

#include <cstdint>
#include <stdexcept>

#include "zetaccel/difference.hpp"
#include "zetaccel/numeric.hpp"

namespace zetaccel {

/// Evaluation requested outside the validity region of the chosen depth.
class region_error : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation at (or effectively at) the pole s = 1 of zeta.
class pole_error : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Parameter bundle for one series evaluation: modulus, operator depth,
/// number of length-c blocks, and the absolute error target the plan was
/// built for. The depth-k formula requires Re(s) > 1 - k at the use site
/// (Re(s) > 1 for k = 0).
struct EvalPlan {
    Modulus c;
    int depth;
    std::int64_t blocks;
    double tol;
};

struct SeriesEvaluation {
    Complex value;
    double est_error;    // truncation bound plus roundoff model
    double truncation;   // analytic tail bound beyond c*N alone
    EvalPlan plan;
    std::int64_t terms_used;  // c*N
    /// True when Re(s) <= 1 - k + 1/2: close enough to the edge of the
    /// absolute-convergence half plane that results should be reported as
    /// conditional rather than trusted at face value.
    bool conditional;
};

/// 1 - c^{1-s}, the factor relating the c-periodic series to zeta.
Complex eta_factor(Modulus c, Complex s);

/// Analytic bound on the truncation error of the depth-k blocked
/// evaluation of the c-periodic series for n^{-s} beyond c*N terms:
///   c^{-k} |(s)_{k+1}| (c(c-1)/2)^{k+1} sum_{m>N} (cm-c)^{-(Re s + k + 1)}
/// with the telescoped per-block bound summed by integral comparison.
/// For k = 0 this is the plain Dirichlet tail (requires Re(s) > 1).
double zeta_c_truncation_bound(Modulus c, int depth, std::int64_t blocks,
                               Complex s);

/// Same shape of bound for the termwise-differentiated series (sequence
/// m^{-s} log m), used by the depth-k derivative route.
double derivative_truncation_bound(Modulus c, int depth, std::int64_t blocks,
                                   Complex s);

/// The c-periodic zeta combination (1 - c^{1-s}) zeta(s), evaluated by the
/// depth-k blocked continuation. Valid for Re(s) > 1 - k (k >= 1); the
/// k = 0 fall-back is the raw series and requires Re(s) > 1. s = 1 is fine
/// here: the combination is entire and the series converges to log c.
SeriesEvaluation zeta_c(Complex s, const EvalPlan& plan);

/// zeta(s) = zeta_c(s) / (1 - c^{1-s}) with parameters chosen by
/// plan_heuristic. Throws pole_error at s = 1.
SeriesEvaluation zeta(Complex s, double tol);

/// zeta(s) under an explicit plan (same division; the caller owns the
/// parameter choice). Throws pole_error when the eta factor vanishes.
SeriesEvaluation zeta_with_plan(Complex s, const EvalPlan& plan);

/// Picks c in {2, 3} away from zeros of the eta factor, depth
/// max(1, ceil(1 - Re s)) + 2 (raised further when the roundoff model
/// calls for it), then the smallest block count whose truncation bound
/// meets the scaled target.
EvalPlan plan_heuristic(Complex s, double tol);

/// Same search with a caller-fixed modulus.
EvalPlan plan_heuristic_for(Modulus c, Complex s, double tol);

/// Smallest block count whose truncation bound meets the absolute target
/// at a fixed depth; 0 when unattainable within the internal block cap.
std::int64_t blocks_for_target(Modulus c, int depth, Complex s, double target);

/// Plan for the depth-k derivative evaluation at fixed modulus.
EvalPlan derivative_plan(Complex s, Modulus c, double tol);

/// Derivative of zeta_c by termwise differentiation of the raw series:
/// -sum a_{c,n} n^{-s} log n, blocked at c*N. Requires Re(s) > 0.
Complex zeta_c_derivative_series(Complex s, Modulus c, std::int64_t blocks);

/// Derivative of zeta_c through the differentiated depth-1 continuation.
/// Requires Re(s) > -1.
Complex zeta_c_derivative_k1(Complex s, Modulus c, std::int64_t blocks);

/// Derivative of zeta_c through the differentiated depth-k continuation
/// (transform of the sequence -n^{-s} log n). Fast-converging route used
/// when tight derivative values are needed.
SeriesEvaluation zeta_c_derivative(Complex s, const EvalPlan& plan);

/// Pieces of the depth-1 derivative formula, shared with the
/// infinite-product evaluations:
/// prefix = -(1/c)[ sum_{i=2}^{c-1} (c+i-1) i^{-s} log i
///                  - (c-1)^2 c^{-s} log c ],
/// block_inner(n) = a_{c,n} sum_{i=1}^{c} a_{c,i} (n+i)^{-s} log(n+i).
Complex k1_derivative_prefix(Modulus c, Complex s);
Complex k1_derivative_inner(Modulus c, Complex s, std::int64_t n);

}  // namespace zetaccel
