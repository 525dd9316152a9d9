#pragma once

#include <cstddef>
#include <vector>

#include "talbot/core/rational.hpp"
#include "talbot/qudit/program.hpp"
#include "talbot/qudit/types.hpp"
#include "talbot/wave/grating.hpp"

namespace talbot::wave {

/// One period of a field on a uniform grid x_i = i/N.
class PeriodicField {
public:
    explicit PeriodicField(std::vector<Complex> samples);

    /// Rectangular transmission: 1 on [0, a), 0 elsewhere.
    static PeriodicField grating(double slit_ratio, std::size_t n);

    std::size_t size() const { return samples_.size(); }
    const std::vector<Complex>& samples() const { return samples_; }
    double norm_squared() const;  // period average of |ψ|²

    /// Exact paraxial propagation of the sampled band: bin m → e^{−2πi m² ζ}.
    PeriodicField propagated(const Rational& zeta) const;
    PeriodicField propagated(double zeta) const;

    /// Multiplies by e^{iφ_d} on region R_d = [d/D, d/D + a); gaps take the nearest region.
    PeriodicField masked(const qudit::PhaseVector& phases, double slit_ratio) const;

    /// ψ(x) → ψ(x − k/N).
    PeriodicField shifted(std::size_t k) const;

private:
    std::vector<Complex> samples_;
};

/// Index d of the region R_d that owns position x ∈ [0, 1).
int mask_region(double x, int dim, double slit_ratio);

/// Smallest N = lcm(x_steps, 2D)·2^k with N ≥ min_size.
std::size_t carpet_grid_size(int dim, std::size_t x_steps, std::size_t min_size = 1024);

/// Coefficients of the field on the sampled basis combs (each of unit period-average
/// norm), with the relative fit residual.
struct GridProjection {
    qudit::QuditVector amplitudes;
    double residual = 0.0;
};
GridProjection project_onto_basis(const PeriodicField& field, int dim, double slit_ratio);

/// Intensity |ψ(x, ζ)|² sampled on z rows × x columns, max-normalized to 1.
struct CarpetImage {
    std::size_t z_steps = 0;
    std::size_t x_steps = 0;
    std::vector<double> z;          // units of 2z_T
    std::vector<double> x;          // units of ℓ
    std::vector<double> intensity;  // row-major, z rows
    std::vector<bool> mask_row;     // true where a phase mask acts at that plane
    double raw_peak = 0.0;

    double at(std::size_t row, std::size_t col) const { return intensity[row * x_steps + col]; }
};

/// Free propagation of the grating over z ∈ [z_start, z_end], both ends included.
CarpetImage render_carpet(const GratingSpec& spec, double z_start, double z_end,
                          std::size_t z_steps, std::size_t x_steps);

struct ProgramCarpet {
    CarpetImage image;
    PeriodicField final_field;
};

/// Runs an optical program on |initial⟩ and samples z over [0, total distance].
/// Row distances and segment boundaries use exact rational phases.
ProgramCarpet render_program_carpet(const GratingSpec& spec, const qudit::OpticalProgram& program,
                                    std::size_t z_steps, std::size_t x_steps, int initial = 0);

struct Revival {
    std::size_t row = 0;
    double z = 0.0;
    double similarity = 0.0;
    bool half_shifted = false;  // matches row 0 translated by ℓ/2
};

/// Rows (other than the first) whose cosine similarity with row 0, or with row 0
/// shifted by half a period, reaches threshold. One local maximum per run.
std::vector<Revival> detect_revivals(const CarpetImage& image, double threshold = 0.999);

}  // namespace talbot::wave
