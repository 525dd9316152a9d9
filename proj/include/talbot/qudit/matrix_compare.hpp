#pragma once

#include "talbot/core/types.hpp"

namespace talbot::qudit {

struct PhaseAlignedDeviation {
    double max_deviation = 0.0;  // max_ij |e^{−iγ} A_ij − B_ij|
    double global_phase = 0.0;   // γ
};

/// Aligns A to B with the phase γ = arg tr(B† A), the L2-optimal global phase,
/// then compares elementwise.
PhaseAlignedDeviation compare_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max elementwise |A − B|, no phase freedom.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max modulus of an off-diagonal entry.
double max_off_diagonal(const ComplexMatrix& m);

}  // namespace talbot::qudit
