#include "talbot/qudit/matrix_compare.hpp"

#include <algorithm>
#include <stdexcept>

namespace talbot::qudit {

PhaseAlignedDeviation compare_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("compare_up_to_global_phase: shape mismatch");
    }
    const Complex overlap = (b.adjoint() * a).trace();
    const double gamma = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
    const ComplexMatrix aligned = a * std::polar(1.0, -gamma);
    return {(aligned - b).cwiseAbs().maxCoeff(), gamma};
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_difference: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double max_off_diagonal(const ComplexMatrix& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j) {
                worst = std::max(worst, std::abs(m(i, j)));
            }
        }
    }
    return worst;
}

}  // namespace talbot::qudit
