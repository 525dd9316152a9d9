#include "talbot/qudit/qft.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "talbot/qudit/gates.hpp"
#include "talbot/qudit/gauss_sums.hpp"
#include "talbot/qudit/matrix_compare.hpp"

namespace talbot::qudit {
namespace {

DecompositionReport make_report(const QuditMatrix& product, const QuditMatrix& target) {
    const auto cmp = compare_up_to_global_phase(product.entries(), target.entries());
    return {cmp.max_deviation, cmp.global_phase, cmp.max_deviation < kComposedTol};
}

PhaseVector phases_with_offset(const std::vector<double>& base, double offset) {
    std::vector<double> out(base);
    for (auto& p : out) {
        p += offset;
    }
    return PhaseVector(std::move(out));
}

}  // namespace

EvenQftDecomposition qft_decomposition_even(int dim) {
    if (dim < 2 || dim % 2 != 0) {
        throw std::invalid_argument("qft_decomposition_even: D must be even, got " + std::to_string(dim));
    }
    std::vector<double> xi(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        xi[static_cast<std::size_t>(d)] = kPi / 8.0 - kPi * d * d / dim;
    }
    PhaseVector phases(std::move(xi));
    auto report = even_decomposition_residual(phases);
    return {std::move(phases), report};
}

DecompositionReport even_decomposition_residual(const PhaseVector& phases) {
    const int dim = phases.dim();
    const QuditMatrix z = diagonal_gate(phases);
    return make_report(z * talbot_unitary(dim, 1) * z, qft_matrix(dim));
}

DecompositionReport odd_decomposition_residual(const PhaseVector& left, const PhaseVector& right,
                                               std::int64_t steps) {
    const int dim = left.dim();
    return make_report(diagonal_gate(left) * talbot_unitary(dim, steps) * diagonal_gate(right), qft_matrix(dim));
}

OddQftDecomposition qft_decomposition_odd(int dim) {
    if (dim < 3 || dim % 2 == 0) {
        throw std::invalid_argument("qft_decomposition_odd: D must be odd and >= 3, got " + std::to_string(dim));
    }
    std::vector<double> minus(static_cast<std::size_t>(dim));
    std::vector<double> plus(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        const double dd = static_cast<double>(d);
        minus[static_cast<std::size_t>(d)] = -kPi * (dd * dd - dim * dd) / dim;
        plus[static_cast<std::size_t>(d)] = -kPi * (dd * dd + dim * dd) / dim;
    }
    const std::int64_t steps = (dim + 1) / 2;

    // √((2/D)): ±1 when the symbol is 1, ±i when it is −1.
    const double root_phase = jacobi_symbol(2, dim) == 1 ? 0.0 : kPi / 2.0;
    const std::array<double, 2> branch_phase{root_phase, root_phase + kPi};

    const QuditMatrix u = talbot_unitary(dim, steps);
    const QuditMatrix f = qft_matrix(dim);
    OddQftDecomposition best{PhaseVector(minus), PhaseVector(plus), steps, 0, 0, 0.0, {}, {}};
    double best_unaligned = std::numeric_limits<double>::infinity();
    for (int bm = 0; bm < 2; ++bm) {
        for (int bp = 0; bp < 2; ++bp) {
            PhaseVector left = phases_with_offset(minus, branch_phase[static_cast<std::size_t>(bm)]);
            PhaseVector right = phases_with_offset(plus, branch_phase[static_cast<std::size_t>(bp)]);
            const QuditMatrix product = diagonal_gate(left) * u * diagonal_gate(right);
            const double unaligned = max_abs_difference(product.entries(), f.entries());
            if (unaligned < best_unaligned - kAnalyticTol) {
                best_unaligned = unaligned;
                best.theta_minus = std::move(left);
                best.theta_plus = std::move(right);
                best.branch_minus = bm;
                best.branch_plus = bp;
                best.unaligned_residual = unaligned;
                best.report = make_report(product, f);
            }
        }
    }
    best.swapped = odd_decomposition_residual(best.theta_plus, best.theta_minus, steps);
    return best;
}

QuditMatrix hadamard_via_talbot() { return compile_program(hadamard_program()); }

QuditMatrix hadamard_half_distance() {
    const QuditMatrix z = diagonal_gate(qft_decomposition_even(2).xi);
    return z * talbot_unitary(2, 1) * z;
}

BlochPreparation prepare_bloch_state(double theta, double phi) {
    OpticalProgram program{2, {}};
    const auto append_hadamard = [&program] {
        for (auto& step : hadamard_program().steps) {
            program.steps.push_back(std::move(step));
        }
    };
    const double outer = kPi / 4.0 - phi / 2.0;
    append_hadamard();
    program.steps.emplace_back(PhaseMask{PhaseVector({theta, -theta})});
    append_hadamard();
    program.steps.emplace_back(PhaseMask{PhaseVector({outer, -outer})});

    QuditVector state = compile_program(program) * QuditVector::basis(2, 0);
    return {std::move(program), std::move(state), outer};
}

}  // namespace talbot::qudit
