#pragma once

#include <cstdint>

#include "talbot/qudit/program.hpp"
#include "talbot/qudit/types.hpp"

namespace talbot::qudit {

struct DecompositionReport {
    double residual = 0.0;      // after global-phase alignment
    double global_phase = 0.0;  // phase removed by the alignment
    bool ok = false;            // residual < kComposedTol
};

struct EvenQftDecomposition {
    PhaseVector xi;  // [Ξ]_d = π/8 − πd²/D
    DecompositionReport report;
};

/// Checks Z_Ξ U_{1/2D} Z_Ξ = F for even D.
EvenQftDecomposition qft_decomposition_even(int dim);

/// Residual of Z_φ U_{1/2D} Z_φ against F for an arbitrary phase vector.
DecompositionReport even_decomposition_residual(const PhaseVector& phases);

struct OddQftDecomposition {
    PhaseVector theta_minus;
    PhaseVector theta_plus;
    /// Talbot steps between the masks. The circulant U_{1/D} alone yields the
    /// Fourier matrix with frequencies scaled by 2⁻¹ mod D; the masks produce F
    /// around U_{1/D}^{(D+1)/2}, propagation by (D+1)/(2D).
    std::int64_t propagation_steps = 0;
    /// √((2/D)) branch per mask: 0 for the principal root, 1 for its negative.
    int branch_minus = 0;
    int branch_plus = 0;
    /// Max |Z U Z − F| with no phase freedom for the chosen branches.
    double unaligned_residual = 0.0;
    DecompositionReport report;
    /// Same product with Θ− and Θ+ exchanged.
    DecompositionReport swapped;
};

/// Z_{Θ−} U_{1/D}^{(D+1)/2} Z_{Θ+} = F for odd D, with
/// [Θ∓]_d = −π(d² ∓ Dd)/D + arg √((2/D)).
OddQftDecomposition qft_decomposition_odd(int dim);

/// Residual of Z_left U_{1/D}^{steps} Z_right against F.
DecompositionReport odd_decomposition_residual(const PhaseVector& left, const PhaseVector& right,
                                               std::int64_t steps);

/// U_{1/4} Z_{π/4} U_{1/4}, which equals the Hadamard matrix exactly.
QuditMatrix hadamard_via_talbot();

/// Z_Ξ U_{1/4} Z_Ξ: the Hadamard in half the distance, up to global phase.
QuditMatrix hadamard_half_distance();

struct BlochPreparation {
    OpticalProgram program;
    QuditVector state;
    /// Phase of the final mask Z_β, β = π/4 − φ/2.
    double outer_rotation = 0.0;
};

/// Prepares cos θ|0⟩ + e^{iφ} sin θ|1⟩ up to a global phase with
/// Z_β H Z_θ H |0⟩, where Z_x = diag(e^{ix}, e^{−ix}) and each H is the Talbot
/// Hadamard schedule. Total propagation is one unit (two Talbot lengths).
BlochPreparation prepare_bloch_state(double theta, double phi);

}  // namespace talbot::qudit
