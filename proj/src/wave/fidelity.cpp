#include "talbot/wave/fidelity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "talbot/core/numeric_format.hpp"
#include "talbot/core/parallel.hpp"
#include "talbot/wave/angular_spectrum.hpp"
#include "talbot/wave/mode_field.hpp"

namespace talbot::wave {

namespace {

constexpr double kMinExtentSigmas = 8.0;

SampledField initial_field(const GratingSpec& spec, std::size_t n, double extent) {
    const ModeField comb = grating_coefficients(spec);
    const double sigma = spec.envelope->sigma;
    std::vector<Complex> s(n);
    const double dx = extent / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = -0.5 * extent + static_cast<double>(i) * dx;
        s[i] = comb.evaluate(x) * std::exp(-x * x / (2.0 * sigma * sigma));
    }
    SampledField f(std::move(s), extent, spec.wavelength);
    const double norm = std::sqrt(f.norm_squared());
    std::vector<Complex> normalized(f.samples());
    for (auto& v : normalized) {
        v /= norm;
    }
    return SampledField(std::move(normalized), extent, spec.wavelength);
}

}  // namespace

GratingSpec fidelity_default_spec(double n_slits) {
    GratingSpec spec;
    spec.slit_ratio = 0.5;
    spec.wavelength = 0.01;
    spec.envelope = GaussianEnvelope{n_slits};
    spec.max_order = static_cast<int>(std::floor(0.1 / spec.wavelength + 1e-9));
    return spec;
}

std::size_t fidelity_sample_count(const GratingSpec& spec, const FidelityOptions& options) {
    spec.validate();
    if (!spec.envelope) {
        throw std::invalid_argument("fidelity_sweep: a Gaussian envelope is required");
    }
    if (options.extent_in_sigmas < kMinExtentSigmas) {
        throw std::invalid_argument("fidelity_sweep: grid extent must be at least 8 sigma");
    }
    const double extent = options.extent_in_sigmas * spec.envelope->sigma;
    std::size_t n = std::max<std::size_t>(options.min_samples, 2);
    while (extent / static_cast<double>(n) > 0.25 * spec.wavelength) {
        n *= 2;
    }
    return n;
}

FidelitySweep fidelity_sweep(const GratingSpec& spec, const std::vector<std::int64_t>& m_list,
                             const FidelityOptions& options) {
    const std::size_t n = fidelity_sample_count(spec, options);
    const double extent = options.extent_in_sigmas * spec.envelope->sigma;
    const SampledField start = initial_field(spec, n, extent);

    FidelitySweep sweep;
    sweep.wavelength = spec.wavelength;
    sweep.samples = n;
    sweep.extent = extent;
    sweep.points.resize(m_list.size());
    std::vector<char> warned(m_list.size(), 0);
    for (const auto m : m_list) {
        if (m < 0) {
            throw std::invalid_argument("fidelity_sweep: m must be nonnegative");
        }
    }
    parallel_for(m_list.size(), [&](std::size_t i) {
        const double z = 2.0 * static_cast<double>(m_list[i]) * spec.talbot_distance();
        const AngularSpectrumResult out = propagate_angular_spectrum(start, z);
        const double norm = out.field.norm_squared();
        const double overlap = norm > 0.0 ? std::norm(start.inner(out.field)) / norm : 0.0;
        sweep.points[i] = {m_list[i], spec.envelope->sigma, spec.envelope->sigma, overlap, out.norm_loss};
        warned[i] = out.aliasing_warning ? 1 : 0;
    });
    for (const char w : warned) {
        sweep.aliasing_warning = sweep.aliasing_warning || w != 0;
    }
    return sweep;
}

FidelitySweep periodic_fidelity(const GratingSpec& spec, const std::vector<std::int64_t>& m_list) {
    GratingSpec periodic = spec;
    periodic.envelope.reset();
    const ModeField start = grating_coefficients(periodic).normalized();
    FidelitySweep sweep;
    sweep.wavelength = spec.wavelength;
    const double inf = std::numeric_limits<double>::infinity();
    for (const auto m : m_list) {
        const ModeField end = propagate_paraxial(start, Rational(m));
        sweep.points.push_back({m, inf, inf, std::norm(start.inner(end)), 0.0});
    }
    return sweep;
}

std::string encode_fidelity_csv(const std::vector<FidelitySweep>& sweeps) {
    std::string out;
    for (const auto& s : sweeps) {
        out += "# wavelength_over_ell=" + format_double(s.wavelength);
        if (s.samples > 0) {
            out += " samples=" + std::to_string(s.samples) + " extent_over_ell=" + format_double(s.extent);
            out += " aliasing_warning=" + std::string(s.aliasing_warning ? "true" : "false");
        } else {
            out += " periodic_control=true";
        }
        out += '\n';
    }
    out += "m,sigma_over_ell,n_slits,fidelity\n";
    for (const auto& s : sweeps) {
        for (const auto& p : s.points) {
            out += std::to_string(p.m) + ',' + format_double(p.sigma) + ',' + format_double(p.n_slits) + ',' +
                   format_double(p.fidelity) + '\n';
        }
    }
    return out;
}

}  // namespace talbot::wave
