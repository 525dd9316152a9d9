#include "talbot/wave/encoding.hpp"

#include <algorithm>
#include <stdexcept>

namespace talbot::wave {

ModeField basis_wavefunction(int dim, int d, const GratingSpec& spec) {
    if (dim < 1 || d < 0 || d >= dim) {
        throw std::invalid_argument("basis_wavefunction: require 0 <= d < D");
    }
    return translate(grating_coefficients(spec), Rational(d, dim));
}

double basis_overlap(int dim, int d, int d_prime, double slit_ratio) {
    if (dim < 1 || !(slit_ratio > 0.0 && slit_ratio <= 1.0)) {
        throw std::invalid_argument("basis_overlap: require D >= 1 and 0 < a <= 1");
    }
    // Overlap of [0, a) with [s, s + a) on the unit circle, s in [0, 1).
    const double s = static_cast<double>(positive_mod(d_prime - d, dim)) / dim;
    const double a = slit_ratio;
    const double direct = std::max(0.0, a - s);
    const double wrapped = std::max(0.0, s + a - 1.0);
    return (direct + wrapped) / a;
}

double mean_orthogonality(int dim, double slit_ratio) {
    if (dim < 2) {
        throw std::invalid_argument("mean_orthogonality: require D >= 2");
    }
    if (!(slit_ratio > 0.0 && slit_ratio <= 1.0)) {
        throw std::invalid_argument("mean_orthogonality: require 0 < a <= 1");
    }
    double sum = 0.0;
    for (int d = 0; d < dim; ++d) {
        for (int dp = 0; dp < d; ++dp) {
            const double o = basis_overlap(dim, d, dp, slit_ratio);
            sum += o * o;
        }
    }
    return 2.0 * sum / (static_cast<double>(dim) * (dim - 1));
}

}  // namespace talbot::wave
