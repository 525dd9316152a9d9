#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "talbot/qudit/types.hpp"

namespace talbot::qudit {

/// Thrown when a propagation fraction q/r is not in lowest terms.
class NonCoprimeError : public std::invalid_argument {
public:
    NonCoprimeError(std::int64_t q, std::int64_t r);

    std::int64_t reduced_q() const { return reduced_q_; }
    std::int64_t reduced_r() const { return reduced_r_; }

private:
    std::int64_t reduced_q_;
    std::int64_t reduced_r_;
};

/// Replica amplitudes after propagating a grating field by ζ = q/r:
///
///     a_j = (1/r) Σ_{n=0}^{r−1} exp(−2πi (q n² − j n) / r)
///
/// so that ψ(x, q/r) = Σ_j a_j ψ₀(x − jℓ/r). The exponent is reduced mod r in
/// exact integer arithmetic before the complex exponential is taken.
///
/// Only n² carries the factor q. Multiplying the linear term by q as well
/// gives the amplitudes for distance q⁻¹/r (q⁻¹ the inverse of q mod r); the
/// two agree exactly when q² ≡ 1 (mod r), which covers every q = ±1 gate.
GaussCoefficients gauss_coefficients(std::int64_t q, std::int64_t r);

/// Even D: the length-2D coefficient vector for ζ = 1/(2D),
/// a_{2d} = e^{−iπ/4} e^{iπd²/D} / √D and zero at odd indices.
GaussCoefficients closed_form_even(int dim);

/// Odd D: the length-D coefficient vector for ζ = 1/D,
///
///     a_d = (2/D) e^{iπ(D−1)/4} e^{2πi h²d²/D} / √D,   h = (D+1)/2 = 2⁻¹ mod D,
///
/// with (2/D) the Jacobi symbol. The quadratic phase equals e^{iπ(D+1)²d²/(2D)};
/// with this form the relative global phase to gauss_coefficients(1, D) is zero.
GaussCoefficients closed_form_odd(int dim);

/// Jacobi symbol (a/b) for odd b ≥ 1, by quadratic reciprocity.
int jacobi_symbol(std::int64_t a, std::int64_t b);

}  // namespace talbot::qudit
