#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "zetaccel/difference.hpp"
#include "zetaccel/numeric.hpp"

namespace zetaccel {

/// Caches values of a pure integer-indexed sequence. All series drivers
/// revisit the same indices through overlapping difference windows, so
/// each b(i) is computed exactly once. Single-consumer.
class MemoSeq {
public:
    explicit MemoSeq(SeqFn fn) : fn_(std::move(fn)) {}

    Complex at(std::int64_t i) {
        if (i < 1) throw std::invalid_argument("MemoSeq: index must be >= 1");
        const std::size_t idx = static_cast<std::size_t>(i - 1);
        if (idx >= values_.size()) {
            values_.reserve(idx + 1);
            for (std::size_t j = values_.size(); j <= idx; ++j) {
                values_.push_back(fn_(static_cast<std::int64_t>(j) + 1));
            }
        }
        return values_[idx];
    }

    SeqFn as_fn() {
        return [this](std::int64_t i) { return at(i); };
    }

private:
    SeqFn fn_;
    std::vector<Complex> values_;
};

/// One transformed tail term together with the magnitude volume that was
/// summed to produce it (drives the roundoff part of error estimates).
struct TailTerm {
    Complex value;
    double magnitude;
};

/// Result of rewriting sum of a_{c,n} b_n as a finite head plus a
/// faster-converging transformed tail at depth k.
///
/// head is an exact finite combination of b_1 .. b_{ck}; the tail term at
/// index n touches only b_{n+k} .. b_{n+ck}. Terms are produced lazily so
/// callers control the truncation point. Single-consumer.
class TransformedSeries {
public:
    using TermFn = std::function<TailTerm(std::int64_t)>;

    TransformedSeries(Modulus c, int depth, Complex head, double head_magnitude,
                      TermFn term)
        : c_(c), depth_(depth), head_(head), head_magnitude_(head_magnitude),
          term_(std::move(term)) {}

    Modulus modulus() const noexcept { return c_; }
    int depth() const noexcept { return depth_; }
    Complex head() const noexcept { return head_; }
    double head_magnitude() const noexcept { return head_magnitude_; }

    /// Tail term for n >= 1.
    TailTerm term(std::int64_t n) const { return term_(n); }

private:
    Modulus c_;
    int depth_;
    Complex head_;
    double head_magnitude_;
    TermFn term_;
};

/// Blocked partial sum: head plus tail terms n = 1 .. c*N. Truncation is
/// always a whole number of length-c blocks; partial blocks are never
/// exposed because the raw series may diverge between block boundaries.
struct BlockedPartialSum {
    Modulus c;
    std::int64_t blocks;
    Complex value;
    Complex last_block_delta;
    double magnitude;  // head + tail magnitude volume, for noise estimates
};

/// Depth-k rewrite of sum of a_{c,n} b_n (k >= 1). The head is
///   sum_{j<k} (-1)^j c^{-(j+1)} [ sum_{i=0}^{c-2} (c+i) D^j b_{i+1}
///                                 - (c-1)^2 D^j b_c ]
/// with D the modulus-c difference operator; the tail term at n is
///   (-1)^k c^{-k} a_{c,n} D^k b_n.
TransformedSeries transform(Modulus c, int depth, SeqFn b);

/// Euler's classical rewrite of an alternating series sum (-1)^{n+1} b_n:
/// head sum_{j<k} F^j b_1 / 2^{j+1} and tail (-1)^{n+1} F^k b_n / 2^k,
/// where F b_n = b_n - b_{n+1}. Note F differs from the modulus-2 operator
/// (which is b_{n+1} - b_{n+2}); this one is kept for cross-checks.
TransformedSeries classic_transform(int depth, SeqFn b);

/// head + compensated sum of tail terms n = 1 .. c*N, ascending. The
/// summation order is fixed, so results are bit-identical for fixed input
/// regardless of the caller's threading.
BlockedPartialSum sum_blocked(const TransformedSeries& ts, std::int64_t blocks);

/// Both sides of the block-telescoping identity
///   sum_{n=c+1}^{cN} a_{c,n} D^k n^{-s}  =  sum_{m=2}^{N} D^{k+1} (cm-c)^{-s}.
/// The two components agree identically; exposed for verification.
std::pair<Complex, Complex> telescope_check(Modulus c, int depth, Complex s,
                                            std::int64_t blocks);

}  // namespace zetaccel
