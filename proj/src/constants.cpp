#include "zetaccel/constants.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "zetaccel/zeta.hpp"

namespace zetaccel {

const ConstantsTable& constants() {
    static const ConstantsTable table{
        3.141592653589793238462643383279502884197,
        0.5772156649015328606065120900824024310422,
        1.282427129100622636875342568869791727768,
        1.837877066409345483560659472811235279723,
        40,
    };
    return table;
}

double constant(std::string_view name) {
    const ConstantsTable& t = constants();
    if (name == "pi") return t.pi;
    if (name == "gamma") return t.euler_gamma;
    if (name == "A") return t.glaisher_A;
    if (name == "log2pi") return t.log_2pi;
    throw std::invalid_argument("constant: unknown name");
}

double laurent_slope(Modulus c, double radius) {
    if (!(radius > 0.0 && radius < 0.5))
        throw std::invalid_argument("laurent_slope: radius must be in (0, 1/2)");

    const EvalPlan plan{c, 8, 400, 1e-12};
    const double log_c = std::log(static_cast<double>(c.value()));
    const std::array<double, 4> offsets{radius, -radius, radius / 2, -radius / 2};

    // Least squares for y = log c + slope * h over the symmetric stencil;
    // even-order expansion terms cancel from the numerator.
    double num = 0.0, den = 0.0;
    for (double h : offsets) {
        const double y = zeta_c(Complex(1.0 + h, 0.0), plan).value.real();
        num += h * (y - log_c);
        den += h * h;
    }
    return num / den;
}

}  // namespace zetaccel
