#pragma once

#include <optional>

namespace talbot::wave {

/// All lengths are in units of the grating period ℓ.
struct GaussianEnvelope {
    double sigma = 0.0;
};

struct GratingSpec {
    double slit_ratio = 0.5;   // a/ℓ, slit open on [0, a) in every period
    double wavelength = 0.01;  // λ/ℓ
    std::optional<GaussianEnvelope> envelope;
    int max_order = 256;       // Fourier orders −M … M

    /// Throws std::invalid_argument unless 0 < a ≤ 1, λ > 0, M ≥ 1 and σ > 0.
    void validate() const;

    /// z_T = ℓ²/λ.
    double talbot_distance() const { return 1.0 / wavelength; }
};

}  // namespace talbot::wave
