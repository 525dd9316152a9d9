#pragma once

#include <stdexcept>

#include "talbot/core/types.hpp"

namespace talbot::photon {

class NonDiagonalError : public std::invalid_argument {
public:
    explicit NonDiagonalError(double off_diagonal_norm);
    double off_diagonal_norm() const { return off_diagonal_norm_; }

private:
    double off_diagonal_norm_;
};

/// χ(d, f) = arg G_df − arg G_d0 − arg G_0f + arg G_00 over the diagonal of a
/// D²×D² operator, wrapped to (−π, π]. Rejects off-diagonal weight above 1e−10
/// and diagonal moduli that differ by more than 1e−10.
Eigen::MatrixXd interaction_phase_signature(const ComplexMatrix& g, int dim);

/// Max wrapped |χ_a − χ_b|.
double signature_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace talbot::photon
