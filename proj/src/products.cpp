#include "zetaccel/products.hpp"

#include <cmath>
#include <stdexcept>

#include "zetaccel/constants.hpp"
#include "zetaccel/numeric.hpp"
#include "zetaccel/zeta.hpp"

namespace zetaccel {

namespace {

IdentityFamily family_for(Modulus c, double s) {
    if (c.value() != 2) return IdentityFamily::gen_c_s;
    return s == 0.0 ? IdentityFamily::wallis : IdentityFamily::huylebrouck_s;
}

int scale_for(Modulus c) { return c.value() == 2 ? 2 : 1; }

double tight_derivative(Modulus c, double s) {
    const EvalPlan plan = derivative_plan(Complex(s, 0.0), c, 1e-11);
    return zeta_c_derivative(Complex(s, 0.0), plan).value.real();
}

ProductReport finish_report(IdentityFamily family, Modulus c, double s,
                            std::int64_t blocks, std::vector<double> partial,
                            double target) {
    const double gap = std::abs(partial.back() - target);
    return {family, c, s, blocks, scale_for(c), std::move(partial), target, gap};
}

}  // namespace

ProductReport product_log_stream(Modulus c, double s, std::int64_t blocks) {
    if (!(s > 0.0))
        throw region_error(
            "product_log_stream requires s > 0; use the continued form");
    if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");

    const std::int64_t cv = c.value();
    const double scale = scale_for(c);
    const Complex sc(s, 0.0);

    std::vector<double> partial;
    partial.reserve(static_cast<std::size_t>(blocks));
    CompensatedSum acc;
    for (std::int64_t b = 1; b <= blocks; ++b) {
        for (std::int64_t n = cv * (b - 1) + 1; n <= cv * b; ++n) {
            // log of n^{-a_{c,n}/n^s}
            acc.add(-static_cast<double>(series_coefficient(c, n)) *
                    inverse_power(n, sc).real() * std::log(static_cast<double>(n)));
        }
        partial.push_back(scale * acc.value());
    }
    const double target = scale * tight_derivative(c, s);
    return finish_report(family_for(c, s), c, s, blocks, std::move(partial), target);
}

ProductReport product_log_stream_continued(Modulus c, double s,
                                           std::int64_t blocks) {
    if (!(s > -1.0))
        throw region_error("product_log_stream_continued requires s > -1");
    if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");

    const std::int64_t cv = c.value();
    const double scale = scale_for(c);
    const Complex sc(s, 0.0);
    const double prefix = k1_derivative_prefix(c, sc).real();

    std::vector<double> partial;
    partial.reserve(static_cast<std::size_t>(blocks));
    CompensatedSum acc;
    for (std::int64_t b = 1; b <= blocks; ++b) {
        for (std::int64_t n = cv * (b - 1) + 1; n <= cv * b; ++n) {
            acc.add(k1_derivative_inner(c, sc, n).real() / static_cast<double>(cv));
        }
        partial.push_back(scale * (prefix + acc.value()));
    }
    const double target = scale * tight_derivative(c, s);
    return finish_report(family_for(c, s), c, s, blocks, std::move(partial), target);
}

const std::vector<IdentityInfo>& identity_catalogue() {
    static const std::vector<IdentityInfo> catalogue{
        {IdentityId::wallis, "wallis", 2, 0.0, true, 1e-3},
        {IdentityId::first, "first", 2, 1.0, false, 1e-3},
        {IdentityId::second, "second", 2, 2.0, false, 1e-4},
        {IdentityId::gen1, "gen1", 3, 0.0, true, 1e-3},
        {IdentityId::gen2, "gen2", 3, 1.0, false, 1e-3},
        {IdentityId::gen3, "gen3", 3, 2.0, false, 1e-4},
        {IdentityId::gen4, "gen4", 4, 0.0, true, 1e-3},
    };
    return catalogue;
}

IdentityId identity_from_string(std::string_view name) {
    for (const auto& info : identity_catalogue()) {
        if (name == info.name) return info.id;
    }
    throw std::invalid_argument("unknown identity: " + std::string(name));
}

const IdentityInfo& identity_info(IdentityId id) {
    for (const auto& info : identity_catalogue()) {
        if (info.id == id) return info;
    }
    throw std::logic_error("identity_info: id not in catalogue");
}

double identity_target_log(IdentityId id) {
    const ConstantsTable& k = constants();
    const double ln2 = std::log(2.0);
    const double ln3 = std::log(3.0);
    const double lnA = std::log(k.glaisher_A);
    switch (id) {
        case IdentityId::wallis:  // pi/2
            return std::log(k.pi / 2.0);
        case IdentityId::first:  // 2^(2 gamma - log 2)
            return (2.0 * k.euler_gamma - ln2) * ln2;
        case IdentityId::second:  // (4 pi e^gamma / A^12)^(pi^2/6)
            return k.pi * k.pi / 6.0 *
                   (2.0 * ln2 + std::log(k.pi) + k.euler_gamma - 12.0 * lnA);
        case IdentityId::gen1:  // 2 pi / 3^(3/2)
            return k.log_2pi - 1.5 * ln3;
        case IdentityId::gen2:  // 3^(gamma - log(3)/2)
            return ln3 * (k.euler_gamma - ln3 / 2.0);
        case IdentityId::gen3:  // (3 (2 pi e^gamma / A^12)^2)^(pi^2/18)
            return k.pi * k.pi / 18.0 *
                   (ln3 + 2.0 * (k.log_2pi + k.euler_gamma - 12.0 * lnA));
        case IdentityId::gen4:  // (2 pi)^(3/2) / 16
            return 1.5 * k.log_2pi - 4.0 * ln2;
    }
    throw std::logic_error("identity_target_log: unreachable");
}

VerifyResult verify_identity(IdentityId id, std::int64_t blocks, double tol) {
    if (blocks < 12)
        throw std::invalid_argument("verify_identity: needs at least 12 blocks");
    if (!(tol > 0.0)) throw std::invalid_argument("verify_identity: tol must be > 0");

    const IdentityInfo& info = identity_info(id);
    const Modulus c{info.c};
    ProductReport report = info.continued
                               ? product_log_stream_continued(c, info.s, blocks)
                               : product_log_stream(c, info.s, blocks);

    // Pin the target to the closed form (already at the display scale); the
    // series-side derivative target remains available through the raw streams.
    report.target_log = identity_target_log(id);
    report.abs_gap = std::abs(report.log_partial.back() - report.target_log);

    bool monotone = true;
    const std::size_t nb = report.log_partial.size();
    for (std::size_t i = nb - 10; i < nb; ++i) {
        const double prev = std::abs(report.log_partial[i - 1] - report.target_log);
        const double cur = std::abs(report.log_partial[i] - report.target_log);
        if (cur > prev + 1e-15) {
            monotone = false;
            break;
        }
    }
    const bool gap_ok = report.abs_gap < tol;
    return {gap_ok && monotone, gap_ok, monotone, tol, std::move(report)};
}

}  // namespace zetaccel
