#pragma once

#include <vector>

#include "talbot/core/rational.hpp"
#include "talbot/core/types.hpp"
#include "talbot/wave/mode_field.hpp"

namespace talbot::wave {

struct ReplicaDecomposition {
    Rational distance;
    std::vector<Complex> coefficients;  // b_j for shifts j/r, j = 0 … r−1
    double residual = 0.0;              // ‖Σ b_j ψ₀(x − j/r) − ψ(ζ)‖ / ‖ψ(ζ)‖
    bool overlapping = false;           // a > 1/r: residual contract does not apply
};

/// Least-squares fit of propagate_paraxial(field, ζ) onto the r shifted copies
/// of field, ζ = q/r in lowest terms.
ReplicaDecomposition replica_decompose(const ModeField& field, const Rational& zeta);

}  // namespace talbot::wave
