#include "talbot/wave/grating.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace talbot::wave {

void GratingSpec::validate() const {
    if (!(slit_ratio > 0.0 && slit_ratio <= 1.0)) {
        throw std::invalid_argument("GratingSpec: slit ratio a/l must lie in (0, 1], got " + std::to_string(slit_ratio));
    }
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw std::invalid_argument("GratingSpec: wavelength must be positive");
    }
    if (max_order < 1) {
        throw std::invalid_argument("GratingSpec: mode truncation M must be >= 1 (M = 0 carries no diffraction)");
    }
    if (envelope && !(envelope->sigma > 0.0)) {
        throw std::invalid_argument("GratingSpec: Gaussian envelope width must be positive");
    }
}

}  // namespace talbot::wave
