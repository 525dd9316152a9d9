#include "talbot/qudit/program.hpp"

#include <string>

#include "talbot/qudit/gates.hpp"

namespace talbot::qudit {

ProgramError::ProgramError(std::size_t step_index, const std::string& what)
    : std::invalid_argument("step " + std::to_string(step_index) + ": " + what), step_index_(step_index) {}

Rational OpticalProgram::total_distance() const {
    Rational total(0);
    for (const auto& step : steps) {
        if (const auto* p = std::get_if<Propagate>(&step)) {
            total = total + p->distance;
        }
    }
    return total;
}

std::int64_t steps_for_distance(int dim, const Rational& distance, std::size_t step_index) {
    if (distance.is_negative()) {
        throw ProgramError(step_index, "negative propagation distance " + distance.to_string());
    }
    const Rational step = canonical_step(dim);
    // distance / step = num * step.den / (den * step.num), step.num == 1
    const Rational count = distance * Rational(step.den(), step.num());
    if (count.den() != 1) {
        throw ProgramError(step_index, "distance " + distance.to_string() +
                                           " is not a multiple of the canonical step " + step.to_string() +
                                           " for D=" + std::to_string(dim));
    }
    return count.num();
}

QuditMatrix compile_program(const OpticalProgram& program) {
    QuditMatrix acc = QuditMatrix::identity(program.dim);
    for (std::size_t i = 0; i < program.steps.size(); ++i) {
        const auto& step = program.steps[i];
        if (const auto* p = std::get_if<Propagate>(&step)) {
            acc = talbot_unitary(program.dim, steps_for_distance(program.dim, p->distance, i)) * acc;
        } else {
            const auto& mask = std::get<PhaseMask>(step);
            if (mask.phases.dim() != program.dim) {
                throw ProgramError(i, "phase mask has " + std::to_string(mask.phases.dim()) +
                                          " phases, expected " + std::to_string(program.dim));
            }
            acc = diagonal_gate(mask.phases) * acc;
        }
    }
    if (!acc.is_unitary()) {
        throw std::logic_error("compile_program: product is not unitary");
    }
    return acc;
}

OpticalProgram hadamard_program() {
    return OpticalProgram{2,
                          {Propagate{Rational(1, 4)}, PhaseMask{PhaseVector({kPi / 4.0, -kPi / 4.0})},
                           Propagate{Rational(1, 4)}}};
}

}  // namespace talbot::qudit
