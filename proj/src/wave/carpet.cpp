#include "talbot/wave/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <variant>

#include "talbot/core/parallel.hpp"
#include "talbot/wave/fft.hpp"

namespace talbot::wave {

namespace {

using qudit::OpticalProgram;
using qudit::PhaseMask;
using qudit::Propagate;

std::vector<Complex> spectrum_of(const std::vector<Complex>& samples, const FftPlan& plan) {
    std::vector<Complex> s(samples);
    plan.forward(s);
    return s;
}

// Inverse transform of spectrum·phase(m), written into out.
template <class PhaseFn>
void synthesize(const std::vector<Complex>& spectrum, const FftPlan& plan, PhaseFn phase, std::vector<Complex>& out) {
    const std::size_t n = spectrum.size();
    out.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = spectrum[k] * phase(signed_frequency(k, n));
    }
    plan.inverse(out);
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& v : out) {
        v *= inv;
    }
}

auto rational_phase(const Rational& zeta) {
    return [zeta](long long m) { return root_of_unity(-mul_mod(m * m, zeta.num(), zeta.den()), zeta.den()); };
}

auto real_phase(double zeta) {
    return [zeta](long long m) {
        const double turns = std::fmod(static_cast<double>(m) * static_cast<double>(m) * zeta, 1.0);
        return std::polar(1.0, -kTwoPi * turns);
    };
}

void check_resolution(std::size_t z_steps, std::size_t x_steps) {
    if (z_steps == 0 || x_steps == 0) {
        throw std::invalid_argument("render_carpet: resolutions must be positive");
    }
}

CarpetImage empty_image(std::size_t z_steps, std::size_t x_steps) {
    CarpetImage img;
    img.z_steps = z_steps;
    img.x_steps = x_steps;
    img.z.resize(z_steps);
    img.x.resize(x_steps);
    for (std::size_t j = 0; j < x_steps; ++j) {
        img.x[j] = static_cast<double>(j) / static_cast<double>(x_steps);
    }
    img.intensity.assign(z_steps * x_steps, 0.0);
    img.mask_row.assign(z_steps, false);
    return img;
}

void store_row(CarpetImage& img, std::size_t row, const std::vector<Complex>& field) {
    const std::size_t stride = field.size() / img.x_steps;
    for (std::size_t j = 0; j < img.x_steps; ++j) {
        img.intensity[row * img.x_steps + j] = std::norm(field[j * stride]);
    }
}

void normalize(CarpetImage& img) {
    const double peak = img.intensity.empty() ? 0.0 : *std::max_element(img.intensity.begin(), img.intensity.end());
    img.raw_peak = peak;
    if (peak > 0.0) {
        for (auto& v : img.intensity) {
            v /= peak;
        }
    }
}

double cosine_similarity(const double* a, const double* b, std::size_t n, std::size_t shift) {
    double ab = 0.0;
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double u = a[j];
        const double v = b[(j + shift) % n];
        ab += u * v;
        aa += u * u;
        bb += v * v;
    }
    if (aa == 0.0 || bb == 0.0) {
        return 0.0;
    }
    return ab / std::sqrt(aa * bb);
}

}  // namespace

PeriodicField::PeriodicField(std::vector<Complex> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw std::invalid_argument("PeriodicField: no samples");
    }
}

PeriodicField PeriodicField::grating(double slit_ratio, std::size_t n) {
    if (!(slit_ratio > 0.0 && slit_ratio <= 1.0) || n == 0) {
        throw std::invalid_argument("PeriodicField::grating: require 0 < a <= 1 and n > 0");
    }
    std::vector<Complex> s(n, Complex{0.0, 0.0});
    const double open = slit_ratio * static_cast<double>(n) - 1e-9;
    for (std::size_t i = 0; i < n && static_cast<double>(i) < open; ++i) {
        s[i] = 1.0;
    }
    return PeriodicField(std::move(s));
}

double PeriodicField::norm_squared() const {
    double sum = 0.0;
    for (const auto& v : samples_) {
        sum += std::norm(v);
    }
    return sum / static_cast<double>(samples_.size());
}

PeriodicField PeriodicField::propagated(const Rational& zeta) const {
    const FftPlan plan(size());
    std::vector<Complex> out;
    synthesize(spectrum_of(samples_, plan), plan, rational_phase(zeta), out);
    return PeriodicField(std::move(out));
}

PeriodicField PeriodicField::propagated(double zeta) const {
    const FftPlan plan(size());
    std::vector<Complex> out;
    synthesize(spectrum_of(samples_, plan), plan, real_phase(zeta), out);
    return PeriodicField(std::move(out));
}

PeriodicField PeriodicField::masked(const qudit::PhaseVector& phases, double slit_ratio) const {
    std::vector<Complex> out(samples_);
    const double n = static_cast<double>(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int d = mask_region(static_cast<double>(i) / n, phases.dim(), slit_ratio);
        out[i] *= std::polar(1.0, phases[d]);
    }
    return PeriodicField(std::move(out));
}

PeriodicField PeriodicField::shifted(std::size_t k) const {
    const std::size_t n = size();
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[(i + k) % n] = samples_[i];
    }
    return PeriodicField(std::move(out));
}

int mask_region(double x, int dim, double slit_ratio) {
    if (dim < 1) {
        throw std::invalid_argument("mask_region: require D >= 1");
    }
    int best = 0;
    double best_distance = 2.0;
    for (int d = 0; d < dim; ++d) {
        const double lo = static_cast<double>(d) / dim;
        const double offset = x - lo - std::floor(x - lo);  // position relative to lo, in [0, 1)
        if (offset < slit_ratio) {
            return d;
        }
        const double distance = std::min(offset - slit_ratio, 1.0 - offset);
        if (distance < best_distance) {
            best_distance = distance;
            best = d;
        }
    }
    return best;
}

std::size_t carpet_grid_size(int dim, std::size_t x_steps, std::size_t min_size) {
    if (dim < 1 || x_steps == 0) {
        throw std::invalid_argument("carpet_grid_size: require D >= 1 and x_steps > 0");
    }
    std::size_t n = std::lcm(x_steps, static_cast<std::size_t>(2 * dim));
    while (n < min_size) {
        n *= 2;
    }
    return n;
}

GridProjection project_onto_basis(const PeriodicField& field, int dim, double slit_ratio) {
    const std::size_t n = field.size();
    if (dim < 1 || n % static_cast<std::size_t>(dim) != 0) {
        throw std::invalid_argument("project_onto_basis: grid size must be a multiple of D");
    }
    const PeriodicField comb = PeriodicField::grating(slit_ratio, n);
    const double comb_norm = std::sqrt(comb.norm_squared());
    const auto rows = static_cast<Eigen::Index>(n);
    ComplexMatrix basis(rows, dim);
    for (int d = 0; d < dim; ++d) {
        const PeriodicField shifted = comb.shifted(static_cast<std::size_t>(d) * (n / static_cast<std::size_t>(dim)));
        for (Eigen::Index i = 0; i < rows; ++i) {
            basis(i, d) = shifted.samples()[static_cast<std::size_t>(i)] / comb_norm;
        }
    }
    ComplexVector rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        rhs(i) = field.samples()[static_cast<std::size_t>(i)];
    }
    const double rhs_norm = rhs.norm();
    if (rhs_norm == 0.0) {
        throw std::invalid_argument("project_onto_basis: zero field");
    }
    const ComplexVector c = basis.colPivHouseholderQr().solve(rhs);
    return {qudit::QuditVector(c), (basis * c - rhs).norm() / rhs_norm};
}

CarpetImage render_carpet(const GratingSpec& spec, double z_start, double z_end, std::size_t z_steps,
                          std::size_t x_steps) {
    spec.validate();
    check_resolution(z_steps, x_steps);
    const std::size_t n = carpet_grid_size(1, x_steps);
    const FftPlan plan(n);
    const std::vector<Complex> spectrum = spectrum_of(PeriodicField::grating(spec.slit_ratio, n).samples(), plan);

    CarpetImage img = empty_image(z_steps, x_steps);
    for (std::size_t i = 0; i < z_steps; ++i) {
        img.z[i] = z_steps == 1 ? z_start
                                : z_start + (z_end - z_start) * static_cast<double>(i) / static_cast<double>(z_steps - 1);
    }
    if (z_steps > 1) {
        img.z.back() = z_end;
    }
    parallel_for(z_steps, [&](std::size_t i) {
        std::vector<Complex> row;
        synthesize(spectrum, plan, real_phase(img.z[i]), row);
        store_row(img, i, row);
    });
    normalize(img);
    return img;
}

ProgramCarpet render_program_carpet(const GratingSpec& spec, const OpticalProgram& program, std::size_t z_steps,
                                    std::size_t x_steps, int initial) {
    spec.validate();
    check_resolution(z_steps, x_steps);
    const int dim = program.dim;
    if (initial < 0 || initial >= dim) {
        throw std::invalid_argument("render_program_carpet: initial basis state out of range");
    }
    const std::size_t n = carpet_grid_size(dim, x_steps);
    const FftPlan plan(n);

    struct Segment {
        Rational start;
        Rational length;
        std::vector<Complex> spectrum;
    };
    std::vector<Segment> segments;
    std::vector<Rational> mask_positions;

    std::vector<Complex> field =
        PeriodicField::grating(spec.slit_ratio, n).shifted(static_cast<std::size_t>(initial) * n / dim).samples();
    Rational position(0);
    for (std::size_t s = 0; s < program.steps.size(); ++s) {
        const auto& step = program.steps[s];
        if (const auto* p = std::get_if<Propagate>(&step)) {
            if (p->distance.is_negative()) {
                throw qudit::ProgramError(s, "negative propagation distance");
            }
            Segment seg{position, p->distance, spectrum_of(field, plan)};
            std::vector<Complex> end;
            synthesize(seg.spectrum, plan, rational_phase(p->distance), end);
            field = std::move(end);
            position = position + p->distance;
            segments.push_back(std::move(seg));
        } else {
            const auto& mask = std::get<PhaseMask>(step);
            if (mask.phases.dim() != dim) {
                throw qudit::ProgramError(s, "phase mask dimension does not match the program");
            }
            field = PeriodicField(std::move(field)).masked(mask.phases, spec.slit_ratio).samples();
            mask_positions.push_back(position);
        }
    }
    const Rational total = position;

    CarpetImage img = empty_image(z_steps, x_steps);
    std::vector<Rational> row_z(z_steps);
    for (std::size_t i = 0; i < z_steps; ++i) {
        row_z[i] = z_steps == 1 ? Rational(0)
                                : Rational(total.num() * static_cast<std::int64_t>(i),
                                           total.den() * static_cast<std::int64_t>(z_steps - 1));
        img.z[i] = row_z[i].to_double();
    }
    for (const auto& m : mask_positions) {
        // Annotate the row nearest to the mask plane.
        std::size_t nearest = 0;
        for (std::size_t i = 1; i < z_steps; ++i) {
            if (std::abs(img.z[i] - m.to_double()) < std::abs(img.z[nearest] - m.to_double())) {
                nearest = i;
            }
        }
        img.mask_row[nearest] = true;
    }

    parallel_for(z_steps, [&](std::size_t i) {
        std::vector<Complex> row;
        const Segment* owner = nullptr;
        for (const auto& seg : segments) {
            if (seg.start <= row_z[i] && row_z[i] <= seg.start + seg.length) {
                owner = &seg;
                break;
            }
        }
        if (owner == nullptr) {
            row = field;  // no propagation in the program
        } else {
            synthesize(owner->spectrum, plan, rational_phase(row_z[i] - owner->start), row);
        }
        store_row(img, i, row);
    });
    normalize(img);
    return {std::move(img), PeriodicField(std::move(field))};
}

std::vector<Revival> detect_revivals(const CarpetImage& image, double threshold) {
    std::vector<Revival> found;
    if (image.z_steps < 2 || image.x_steps == 0) {
        return found;
    }
    const double* first = image.intensity.data();
    const std::size_t nx = image.x_steps;

    auto scan = [&](bool half) {
        if (half && nx % 2 != 0) {
            return;
        }
        const std::size_t shift = half ? nx / 2 : 0;
        std::size_t i = 1;
        while (i < image.z_steps) {
            const double s = cosine_similarity(first, image.intensity.data() + i * nx, nx, shift);
            if (s < threshold) {
                ++i;
                continue;
            }
            const std::size_t run_start = i;
            Revival best{i, image.z[i], s, half};
            for (++i; i < image.z_steps; ++i) {
                const double si = cosine_similarity(first, image.intensity.data() + i * nx, nx, shift);
                if (si < threshold) {
                    break;
                }
                if (si > best.similarity) {
                    best = {i, image.z[i], si, half};
                }
            }
            // A run touching row 0 is the starting plane itself, not a revival.
            if (half || run_start != 1) {
                found.push_back(best);
            }
        }
    };
    scan(false);
    scan(true);
    std::sort(found.begin(), found.end(), [](const Revival& a, const Revival& b) {
        return a.row != b.row ? a.row < b.row : a.half_shifted < b.half_shifted;
    });
    return found;
}

}  // namespace talbot::wave
