#pragma once

#include "talbot/core/types.hpp"

namespace talbot::photon {

/// Singular values of the D×D amplitude matrix c(d, f) of Σ c(d, f)|d⟩|f⟩, nonincreasing.
Eigen::VectorXd schmidt_coefficients(const ComplexMatrix& amplitudes);

}  // namespace talbot::photon
