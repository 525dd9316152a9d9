#include "talbot/photon/schmidt.hpp"

#include <stdexcept>

namespace talbot::photon {

Eigen::VectorXd schmidt_coefficients(const ComplexMatrix& amplitudes) {
    if (amplitudes.size() == 0) {
        throw std::invalid_argument("schmidt_coefficients: empty state");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(amplitudes);
    return svd.singularValues();
}

}  // namespace talbot::photon
