#include "talbot/photon/phase_signature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace talbot::photon {

namespace {
constexpr double kDiagonalTol = 1e-10;
}

NonDiagonalError::NonDiagonalError(double off_diagonal_norm)
    : std::invalid_argument("operator is not diagonal: off-diagonal norm " + std::to_string(off_diagonal_norm)),
      off_diagonal_norm_(off_diagonal_norm) {}

Eigen::MatrixXd interaction_phase_signature(const ComplexMatrix& g, int dim) {
    const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
    if (dim < 1 || g.rows() != n || g.cols() != n) {
        throw std::invalid_argument("interaction_phase_signature: expected a D^2 x D^2 operator");
    }
    ComplexMatrix off = g;
    off.diagonal().setZero();
    const double off_norm = off.norm();
    if (off_norm > kDiagonalTol) {
        throw NonDiagonalError(off_norm);
    }
    const Eigen::VectorXd moduli = g.diagonal().cwiseAbs();
    if (moduli.maxCoeff() - moduli.minCoeff() > kDiagonalTol || moduli.minCoeff() == 0.0) {
        throw std::invalid_argument("interaction_phase_signature: diagonal moduli are not uniform");
    }
    auto phase = [&](int d, int f) { return std::arg(g(d * dim + f, d * dim + f)); };
    Eigen::MatrixXd chi(dim, dim);
    for (int d = 0; d < dim; ++d) {
        for (int f = 0; f < dim; ++f) {
            chi(d, f) = wrap_phase(phase(d, f) - phase(d, 0) - phase(0, f) + phase(0, 0));
        }
    }
    return chi;
}

double signature_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("signature_distance: shape mismatch");
    }
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(wrap_phase(a(i) - b(i))));
    }
    return worst;
}

}  // namespace talbot::photon
