#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "talbot/wave/grating.hpp"

namespace talbot::wave {

struct FidelityOptions {
    double extent_in_sigmas = 16.0;    // grid extent X = this·σ; below 8 is rejected
    std::size_t min_samples = 1 << 16; // doubled until dx ≤ λ/4
};

struct FidelityPoint {
    std::int64_t m = 0;
    double sigma = 0.0;    // σ/ℓ, infinite for the periodic control
    double n_slits = 0.0;  // σ/ℓ read as the number of illuminated slits
    double fidelity = 0.0;
    double norm_loss = 0.0;
};

struct FidelitySweep {
    std::vector<FidelityPoint> points;  // in m_list order
    double wavelength = 0.0;
    std::size_t samples = 0;
    double extent = 0.0;
    bool aliasing_warning = false;
};

/// Sweep defaults: a/ℓ = 1/2, λ/ℓ = 1/100, σ = n_slits, comb truncated to
/// |m| ≤ 0.1ℓ/λ (paraxial band).
GratingSpec fidelity_default_spec(double n_slits);

/// Grid size used for a grating: smallest power of two ≥ min_samples with X/N ≤ λ/4.
std::size_t fidelity_sample_count(const GratingSpec& spec, const FidelityOptions& options = {});

/// F(m) = |⟨ψ₀|ψ(2m z_T)⟩|² for ψ₀ the truncated comb times e^{−x²/(2σ²)}, both
/// normalized on the grid, ψ propagated with the angular spectrum method.
FidelitySweep fidelity_sweep(const GratingSpec& spec, const std::vector<std::int64_t>& m_list,
                             const FidelityOptions& options = {});

/// Periodic control without envelope, paraxial propagation: F = 1 at all m.
FidelitySweep periodic_fidelity(const GratingSpec& spec, const std::vector<std::int64_t>& m_list);

/// CSV with '#' parameter lines then header m,sigma_over_ell,n_slits,fidelity.
std::string encode_fidelity_csv(const std::vector<FidelitySweep>& sweeps);

}  // namespace talbot::wave
