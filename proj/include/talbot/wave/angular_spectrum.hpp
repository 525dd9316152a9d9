#pragma once

#include <cstddef>
#include <vector>

#include "talbot/core/types.hpp"

namespace talbot::wave {

/// Field on x_i = −X/2 + i·X/N, i = 0 … N−1, N a power of two. Lengths in units of ℓ.
class SampledField {
public:
    SampledField(std::vector<Complex> samples, double extent, double wavelength);

    std::size_t size() const { return samples_.size(); }
    double extent() const { return extent_; }
    double wavelength() const { return wavelength_; }
    double spacing() const { return extent_ / static_cast<double>(samples_.size()); }
    double position(std::size_t i) const { return -0.5 * extent_ + static_cast<double>(i) * spacing(); }
    const std::vector<Complex>& samples() const { return samples_; }

    double norm_squared() const;  // Σ|ψ_i|² dx
    Complex inner(const SampledField& other) const;

private:
    std::vector<Complex> samples_;
    double extent_;
    double wavelength_;
};

struct AngularSpectrumResult {
    SampledField field;
    double norm_loss = 0.0;         // 1 − ‖ψ(z)‖²/‖ψ(0)‖², from dropped evanescent bins
    double nyquist_fraction = 0.0;  // spectral energy with |f| ≥ 0.9 f_Nyquist
    bool aliasing_warning = false;
};

/// Spectral energy fraction within 10% of the Nyquist frequency.
double nyquist_energy_fraction(const SampledField& field);

/// Exact scalar propagation by z: bin k_x → e^{i z √(k² − k_x²)}, evanescent bins removed.
/// Throws std::invalid_argument unless dx ≤ λ/4 and z ≥ 0.
AngularSpectrumResult propagate_angular_spectrum(const SampledField& field, double z);

}  // namespace talbot::wave
