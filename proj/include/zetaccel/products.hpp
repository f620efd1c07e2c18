#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zetaccel/difference.hpp"

namespace zetaccel {

/// Which displayed identity family a product report belongs to. For c = 2
/// the classical displays square the natural product (each factor appears
/// twice), so those reports carry scale 2; the general-c families carry
/// scale 1.
enum class IdentityFamily { wallis, huylebrouck_s, gen_c_s };

/// Log-domain record of a blocked Wallis-type partial product. log_partial
/// has one entry per block, at the identity's display scale; abs_gap is
/// |log_partial.back() - target_log|.
struct ProductReport {
    IdentityFamily family;
    Modulus c;
    double s;
    std::int64_t blocks;
    int scale;  // 2 for the c = 2 displays, else 1
    std::vector<double> log_partial;
    double target_log;
    double abs_gap;
};

/// Blocked partial products of prod n^{-a_{c,n} / n^s} in the log domain
/// (the direct termwise route; requires s > 0). target_log is the
/// derivative of the c-periodic zeta combination, computed independently
/// by the depth-k accelerated route at tight tolerance.
ProductReport product_log_stream(Modulus c, double s, std::int64_t blocks);

/// Same quantity through the analytically-continued form (valid s > -1):
/// a fixed prefix plus blocked double products, mirroring the depth-1
/// derivative formula. Routes s <= 0 evaluations.
ProductReport product_log_stream_continued(Modulus c, double s,
                                           std::int64_t blocks);

enum class IdentityId { wallis, first, second, gen1, gen2, gen3, gen4 };

struct IdentityInfo {
    IdentityId id;
    const char* name;
    int c;
    double s;
    bool continued;      // evaluation route
    double default_tol;  // measured empirically at N = 1e5; see docs
};

const std::vector<IdentityInfo>& identity_catalogue();
IdentityId identity_from_string(std::string_view name);
const IdentityInfo& identity_info(IdentityId id);

/// Closed-form value of the identity's left-hand side, as a log, built
/// from the stored reference constants.
double identity_target_log(IdentityId id);

struct VerifyResult {
    bool pass;
    bool gap_ok;
    bool monotone;  // |gap| non-increasing over the last 10 blocks
    double tol;
    ProductReport report;
};

/// Evaluates the catalogued identity at N blocks against its closed-form
/// target. Passes when the final gap is below tol and the gap sequence
/// still shrinks across the last 10 blocks.
VerifyResult verify_identity(IdentityId id, std::int64_t blocks, double tol);

}  // namespace zetaccel
