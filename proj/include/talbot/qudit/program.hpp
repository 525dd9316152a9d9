#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "talbot/core/rational.hpp"
#include "talbot/qudit/types.hpp"

namespace talbot::qudit {

/// Free propagation by `distance`, in units of 2z_T.
struct Propagate {
    Rational distance;
};

/// Phase mask imprinting φ_d on region R_d.
struct PhaseMask {
    PhaseVector phases;
};

using ProgramStep = std::variant<Propagate, PhaseMask>;

/// Ordered optical schedule, first step acts first.
struct OpticalProgram {
    int dim = 2;
    std::vector<ProgramStep> steps;

    Rational total_distance() const;
};

/// Raised when a step cannot be realised on the D-grid.
class ProgramError : public std::invalid_argument {
public:
    ProgramError(std::size_t step_index, const std::string& what);
    std::size_t step_index() const { return step_index_; }

private:
    std::size_t step_index_;
};

/// Number of canonical Talbot steps in `distance` for this dimension.
/// Throws ProgramError when the distance is negative or off the grid.
std::int64_t steps_for_distance(int dim, const Rational& distance, std::size_t step_index = 0);

/// Ordered product M_last ⋯ M_first of the program's gates.
QuditMatrix compile_program(const OpticalProgram& program);

/// Hadamard schedule for D = 2: Propagate(1/4), Z_{π/4}, Propagate(1/4).
OpticalProgram hadamard_program();

}  // namespace talbot::qudit
