#include "talbot/wave/angular_spectrum.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "talbot/wave/fft.hpp"

namespace talbot::wave {

namespace {

constexpr double kAliasingThreshold = 1e-6;

double spectral_energy(const std::vector<Complex>& spectrum) {
    double s = 0.0;
    for (const auto& v : spectrum) {
        s += std::norm(v);
    }
    return s;
}

double band_fraction(const std::vector<Complex>& spectrum) {
    const std::size_t n = spectrum.size();
    const double total = spectral_energy(spectrum);
    if (total == 0.0) {
        return 0.0;
    }
    const double edge = 0.9 * static_cast<double>(n / 2);
    double high = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(static_cast<double>(signed_frequency(k, n))) >= edge) {
            high += std::norm(spectrum[k]);
        }
    }
    return high / total;
}

}  // namespace

SampledField::SampledField(std::vector<Complex> samples, double extent, double wavelength)
    : samples_(std::move(samples)), extent_(extent), wavelength_(wavelength) {
    if (samples_.empty() || !std::has_single_bit(samples_.size())) {
        throw std::invalid_argument("SampledField: sample count must be a power of two");
    }
    if (!(extent_ > 0.0) || !(wavelength_ > 0.0)) {
        throw std::invalid_argument("SampledField: extent and wavelength must be positive");
    }
}

double SampledField::norm_squared() const {
    double s = 0.0;
    for (const auto& v : samples_) {
        s += std::norm(v);
    }
    return s * spacing();
}

Complex SampledField::inner(const SampledField& other) const {
    if (other.size() != size() || other.extent() != extent()) {
        throw std::invalid_argument("SampledField::inner: grids differ");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        s += std::conj(samples_[i]) * other.samples_[i];
    }
    return s * spacing();
}

double nyquist_energy_fraction(const SampledField& field) {
    const FftPlan plan(field.size());
    std::vector<Complex> spectrum(field.samples());
    plan.forward(spectrum);
    return band_fraction(spectrum);
}

AngularSpectrumResult propagate_angular_spectrum(const SampledField& field, double z) {
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw std::invalid_argument("propagate_angular_spectrum: distance must be finite and nonnegative");
    }
    const double lambda = field.wavelength();
    if (field.spacing() > 0.25 * lambda) {
        throw std::invalid_argument("propagate_angular_spectrum: grid spacing exceeds lambda/4");
    }
    const std::size_t n = field.size();
    const FftPlan plan(n);
    std::vector<Complex> spectrum(field.samples());
    plan.forward(spectrum);
    const double fraction = band_fraction(spectrum);
    if (z == 0.0) {
        return {field, 0.0, fraction, fraction > kAliasingThreshold};
    }

    const double before = spectral_energy(spectrum);
    const double k = kTwoPi / lambda;
    const double dk = kTwoPi / field.extent();
    // e^{ikz} is split off and reduced in turns so large z keeps full phase precision.
    const double carrier_turns = std::fmod(z / lambda, 1.0);
    const Complex carrier = std::polar(1.0, kTwoPi * carrier_turns);
    for (std::size_t i = 0; i < n; ++i) {
        const double kx = dk * static_cast<double>(signed_frequency(i, n));
        if (std::abs(kx) > k) {
            spectrum[i] = 0.0;
            continue;
        }
        const double kz = std::sqrt((k - kx) * (k + kx));
        const double excess = -kx * kx / (k + kz);  // kz − k without cancellation
        spectrum[i] *= carrier * std::polar(1.0, z * excess);
    }
    const double after = spectral_energy(spectrum);
    plan.inverse(spectrum);
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& v : spectrum) {
        v *= inv;
    }
    const double loss = before > 0.0 ? 1.0 - after / before : 0.0;
    return {SampledField(std::move(spectrum), field.extent(), lambda), loss, fraction, fraction > kAliasingThreshold};
}

}  // namespace talbot::wave
