#include "talbot/wave/mode_field.hpp"

#include <cmath>
#include <stdexcept>

namespace talbot::wave {

ModeField::ModeField(int max_order, std::vector<Complex> coefficients, std::optional<double> slit_ratio)
    : max_order_(max_order), coefficients_(std::move(coefficients)), slit_ratio_(slit_ratio) {
    if (max_order_ < 0 || coefficients_.size() != static_cast<std::size_t>(2 * max_order_ + 1)) {
        throw std::invalid_argument("ModeField: expected 2M+1 coefficients");
    }
}

double ModeField::norm_squared() const {
    double s = 0.0;
    for (const auto& a : coefficients_) {
        s += std::norm(a);
    }
    return s;
}

Complex ModeField::inner(const ModeField& other) const {
    if (other.max_order_ != max_order_) {
        throw std::invalid_argument("ModeField::inner: truncation mismatch");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        s += std::conj(coefficients_[i]) * other.coefficients_[i];
    }
    return s;
}

Complex ModeField::evaluate(double x) const {
    const double frac = x - std::floor(x);
    const Complex step = std::polar(1.0, kTwoPi * frac);
    // Walk outwards from m = 0 in both directions.
    Complex sum = at(0);
    Complex up{1.0, 0.0};
    for (int m = 1; m <= max_order_; ++m) {
        up *= step;
        sum += at(m) * up + at(-m) * std::conj(up);
    }
    return sum;
}

ModeField ModeField::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) {
        throw std::domain_error("ModeField::normalized: zero field");
    }
    std::vector<Complex> c(coefficients_);
    for (auto& a : c) {
        a /= n;
    }
    return ModeField(max_order_, std::move(c), slit_ratio_);
}

ModeField grating_coefficients(const GratingSpec& spec) {
    spec.validate();
    const int M = spec.max_order;
    const double a = spec.slit_ratio;
    std::vector<Complex> c(static_cast<std::size_t>(2 * M + 1));
    for (int m = -M; m <= M; ++m) {
        Complex value{a, 0.0};
        if (m != 0) {
            const double arg = kPi * m * a;
            value = std::polar(std::sin(arg) / (kPi * m), -arg);
        }
        c[static_cast<std::size_t>(m + M)] = value;
    }
    return ModeField(M, std::move(c), a);
}

ModeField propagate_paraxial(const ModeField& field, double zeta) {
    const int M = field.max_order();
    std::vector<Complex> c(field.coefficients());
    for (int m = -M; m <= M; ++m) {
        const double turns = std::fmod(static_cast<double>(m) * m * zeta, 1.0);
        c[static_cast<std::size_t>(m + M)] *= std::polar(1.0, -kTwoPi * turns);
    }
    return ModeField(M, std::move(c), field.slit_ratio());
}

ModeField propagate_paraxial(const ModeField& field, const Rational& zeta) {
    const int M = field.max_order();
    std::vector<Complex> c(field.coefficients());
    for (int m = -M; m <= M; ++m) {
        const std::int64_t k = mul_mod(static_cast<std::int64_t>(m) * m, zeta.num(), zeta.den());
        c[static_cast<std::size_t>(m + M)] *= root_of_unity(-k, zeta.den());
    }
    return ModeField(M, std::move(c), field.slit_ratio());
}

ModeField translate(const ModeField& field, const Rational& shift) {
    const int M = field.max_order();
    std::vector<Complex> c(field.coefficients());
    for (int m = -M; m <= M; ++m) {
        c[static_cast<std::size_t>(m + M)] *= root_of_unity(-mul_mod(m, shift.num(), shift.den()), shift.den());
    }
    return ModeField(M, std::move(c), field.slit_ratio());
}

}  // namespace talbot::wave
