#pragma once

#include <string_view>

#include "zetaccel/difference.hpp"

namespace zetaccel {

/// Reference constants, stored as literals rather than computed. The
/// source digits (40 significant figures, correctly rounded into double)
/// were cross-checked against OEIS (A000796, A001620, A074962) and the
/// DLMF tables; see docs/constants.md.
struct ConstantsTable {
    double pi;
    double euler_gamma;
    double glaisher_A;
    double log_2pi;
    int precision_digits;
};

const ConstantsTable& constants();

/// Lookup by name: "pi", "gamma", "A", "log2pi". Unknown names throw.
double constant(std::string_view name);

/// Slope of the c-periodic zeta combination at s = 1, fitted from
/// evaluations at 1 +/- radius and 1 +/- radius/2 with the intercept
/// pinned at log c. Matches log(c) (gamma - log(c)/2) up to the quadratic
/// term of the expansion, about radius^2 in absolute error.
double laurent_slope(Modulus c, double radius);

}  // namespace zetaccel
