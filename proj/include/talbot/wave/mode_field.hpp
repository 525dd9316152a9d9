#pragma once

#include <optional>
#include <vector>

#include "talbot/core/rational.hpp"
#include "talbot/core/types.hpp"
#include "talbot/wave/grating.hpp"

namespace talbot::wave {

/// ℓ-periodic transverse field ψ(x) = Σ_{m=−M}^{M} A_m e^{2πi m x}, x in units of ℓ.
/// Inner products are period averages, so ⟨ψ|ψ⟩ = Σ|A_m|².
class ModeField {
public:
    ModeField(int max_order, std::vector<Complex> coefficients, std::optional<double> slit_ratio = std::nullopt);

    int max_order() const { return max_order_; }
    Complex at(int m) const { return coefficients_[static_cast<std::size_t>(m + max_order_)]; }
    const std::vector<Complex>& coefficients() const { return coefficients_; }

    /// Width of the open slit this field was built from, when known.
    std::optional<double> slit_ratio() const { return slit_ratio_; }

    double norm_squared() const;
    Complex inner(const ModeField& other) const;  // Σ conj(A_m) B_m
    Complex evaluate(double x) const;
    ModeField normalized() const;

private:
    int max_order_;
    std::vector<Complex> coefficients_;
    std::optional<double> slit_ratio_;
};

/// A_m = (1/ℓ)∫₀^a e^{−2πi m x/ℓ} dx = (a/ℓ) e^{−iπma/ℓ} sin(πma/ℓ)/(πma/ℓ).
ModeField grating_coefficients(const GratingSpec& spec);

/// Paraxial propagation by ζ (units of 2z_T): A_m → A_m e^{−2πi m² ζ}.
ModeField propagate_paraxial(const ModeField& field, double zeta);

/// Same, with the phase m²ζ reduced mod 1 in exact integer arithmetic.
ModeField propagate_paraxial(const ModeField& field, const Rational& zeta);

/// ψ(x) → ψ(x − s), s in units of ℓ.
ModeField translate(const ModeField& field, const Rational& shift);

}  // namespace talbot::wave
