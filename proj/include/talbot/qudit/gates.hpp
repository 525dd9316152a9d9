#pragma once

#include <cstdint>
#include <vector>

#include "talbot/core/rational.hpp"
#include "talbot/qudit/types.hpp"

namespace talbot::qudit {

/// X^power with X|m⟩ = |(m+1) mod D⟩.
QuditMatrix pauli_shift(int dim, std::int64_t power = 1);

/// Distance of one Talbot gate, in units of 2z_T: 1/(2D) for even D, 1/D for odd D.
Rational canonical_step(int dim);

/// Number of canonical steps that make a full revival: 2D (even) or D (odd).
std::int64_t step_period(int dim);

/// First column of the one-step Talbot gate: the nonzero Gauss coefficients
/// a_{2d} of ζ = 1/(2D) (even D) or a_d of ζ = 1/D (odd D).
std::vector<Complex> talbot_step_column(int dim);

/// Builds the circulant matrix C[i][j] = column[(i − j) mod D].
QuditMatrix circulant(const std::vector<Complex>& column);

/// (one-step Talbot gate)^q. Negative q propagates backwards; q is reduced
/// mod step_period(D) and the power is formed by circulant convolution, so the
/// result stays exactly circulant.
QuditMatrix talbot_unitary(int dim, std::int64_t q);

/// diag(e^{iφ_0}, …, e^{iφ_{D−1}}).
QuditMatrix diagonal_gate(const PhaseVector& phases);

/// F[d][j] = e^{−2πi jd/D} / √D.
QuditMatrix qft_matrix(int dim);

/// Clifford phase vector [Ω]_d = πd(d−1)/D.
PhaseVector clifford_phase_vector(int dim);

}  // namespace talbot::qudit
