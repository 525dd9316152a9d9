#pragma once

#include "talbot/wave/grating.hpp"
#include "talbot/wave/mode_field.hpp"

namespace talbot::wave {

/// ⟨x|d_D⟩ = ψ₀(x − d/D), ψ₀ the grating comb described by spec.
ModeField basis_wavefunction(int dim, int d, const GratingSpec& spec);

/// Exact ⟨d|d'⟩ for normalized slit combs of width a, using the periodic
/// rectangle overlap with separation (d' − d)/D.
double basis_overlap(int dim, int d, int d_prime, double slit_ratio);

/// 2 Σ_{d>d'} |⟨d|d'⟩|² / (D(D − 1)) for D ≥ 2.
double mean_orthogonality(int dim, double slit_ratio);

}  // namespace talbot::wave
