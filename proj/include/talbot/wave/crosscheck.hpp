#pragma once

#include <cstdint>
#include <optional>

#include "talbot/qudit/types.hpp"
#include "talbot/wave/grating.hpp"
#include "talbot/wave/mode_field.hpp"

namespace talbot::wave {

/// Least-squares amplitudes of field on the D basis combs of width a, plus the
/// relative residual of that fit.
struct BasisProjection {
    qudit::QuditVector amplitudes;
    double residual = 0.0;
};
BasisProjection project_onto_basis(const ModeField& field, int dim, const GratingSpec& spec);

struct CrosscheckReport {
    int dim = 0;
    std::int64_t q = 0;
    int max_order = 0;
    double slit_ratio = 0.0;
    qudit::QuditMatrix wave_matrix = qudit::QuditMatrix::identity(1);
    double max_deviation = 0.0;            // after global-phase alignment
    double global_phase = 0.0;
    double max_projection_residual = 0.0;
    bool certified = false;                // projection residual ≤ 1e−4
};

/// Propagates every basis comb by q canonical steps in the mode layer, projects
/// back onto the basis and compares with talbot_unitary(D, q).
/// Defaults: M = 256, a = 1/(2D). Throws if a > 1/(2D).
CrosscheckReport gate_crosscheck(int dim, std::int64_t q = 1, int max_order = 256,
                                 std::optional<double> slit_ratio = std::nullopt);

}  // namespace talbot::wave
