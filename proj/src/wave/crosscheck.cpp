#include "talbot/wave/crosscheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "talbot/qudit/gates.hpp"
#include "talbot/qudit/matrix_compare.hpp"
#include "talbot/wave/encoding.hpp"

namespace talbot::wave {

namespace {

constexpr double kProjectionResidualLimit = 1e-4;

ComplexVector to_vector(const ModeField& f) {
    ComplexVector v(static_cast<Eigen::Index>(f.coefficients().size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = f.coefficients()[static_cast<std::size_t>(i)];
    }
    return v;
}

ComplexMatrix basis_matrix(int dim, const GratingSpec& spec) {
    const auto rows = static_cast<Eigen::Index>(2 * spec.max_order + 1);
    ComplexMatrix b(rows, dim);
    for (int d = 0; d < dim; ++d) {
        b.col(d) = to_vector(basis_wavefunction(dim, d, spec).normalized());
    }
    return b;
}

BasisProjection project(const ComplexMatrix& basis, const ModeField& field) {
    const ComplexVector rhs = to_vector(field);
    const double norm = rhs.norm();
    if (norm == 0.0) {
        throw std::invalid_argument("project_onto_basis: zero field");
    }
    const ComplexVector c = basis.colPivHouseholderQr().solve(rhs);
    return {qudit::QuditVector(c), (basis * c - rhs).norm() / norm};
}

}  // namespace

BasisProjection project_onto_basis(const ModeField& field, int dim, const GratingSpec& spec) {
    if (field.max_order() != spec.max_order) {
        throw std::invalid_argument("project_onto_basis: truncation mismatch");
    }
    return project(basis_matrix(dim, spec), field);
}

CrosscheckReport gate_crosscheck(int dim, std::int64_t q, int max_order, std::optional<double> slit_ratio) {
    if (dim < 2) {
        throw std::invalid_argument("gate_crosscheck: require D >= 2");
    }
    GratingSpec spec;
    spec.max_order = max_order;
    spec.slit_ratio = slit_ratio.value_or(1.0 / (2.0 * dim));
    spec.validate();
    if (spec.slit_ratio > 1.0 / (2.0 * dim) + 1e-15) {
        throw std::invalid_argument("gate_crosscheck: slit ratio must be <= 1/(2D) for separated replicas");
    }

    const ComplexMatrix basis = basis_matrix(dim, spec);
    const Rational distance = qudit::canonical_step(dim) * Rational(q);

    ComplexMatrix wave(dim, dim);
    double worst_residual = 0.0;
    for (int d = 0; d < dim; ++d) {
        const ModeField start = basis_wavefunction(dim, d, spec).normalized();
        const BasisProjection p = project(basis, propagate_paraxial(start, distance));
        wave.col(d) = p.amplitudes.amplitudes();
        worst_residual = std::max(worst_residual, p.residual);
    }

    const qudit::QuditMatrix reference = qudit::talbot_unitary(dim, q);
    const auto cmp = qudit::compare_up_to_global_phase(wave, reference.entries());

    CrosscheckReport report;
    report.dim = dim;
    report.q = q;
    report.max_order = max_order;
    report.slit_ratio = spec.slit_ratio;
    report.wave_matrix = qudit::QuditMatrix(wave);
    report.max_deviation = cmp.max_deviation;
    report.global_phase = cmp.global_phase;
    report.max_projection_residual = worst_residual;
    report.certified = worst_residual <= kProjectionResidualLimit;
    return report;
}

}  // namespace talbot::wave
