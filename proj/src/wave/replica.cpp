#include "talbot/wave/replica.hpp"

#include <stdexcept>

namespace talbot::wave {

ReplicaDecomposition replica_decompose(const ModeField& field, const Rational& zeta) {
    const std::int64_t r = zeta.den();
    const int M = field.max_order();
    const auto rows = static_cast<Eigen::Index>(2 * M + 1);
    if (r > rows) {
        throw std::invalid_argument("replica_decompose: more replicas than retained modes");
    }
    if (field.norm_squared() == 0.0) {
        throw std::invalid_argument("replica_decompose: zero field");
    }

    ComplexMatrix basis(rows, static_cast<Eigen::Index>(r));
    for (std::int64_t j = 0; j < r; ++j) {
        const ModeField shifted = translate(field, Rational(j, r));
        for (Eigen::Index i = 0; i < rows; ++i) {
            basis(i, static_cast<Eigen::Index>(j)) = shifted.coefficients()[static_cast<std::size_t>(i)];
        }
    }
    const ModeField target = propagate_paraxial(field, zeta);
    ComplexVector rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        rhs(i) = target.coefficients()[static_cast<std::size_t>(i)];
    }

    const ComplexVector b = basis.colPivHouseholderQr().solve(rhs);

    ReplicaDecomposition out;
    out.distance = zeta;
    out.coefficients.assign(b.data(), b.data() + b.size());
    out.residual = (basis * b - rhs).norm() / rhs.norm();
    if (const auto a = field.slit_ratio()) {
        out.overlapping = *a > 1.0 / static_cast<double>(r) + 1e-12;
    }
    return out;
}

}  // namespace talbot::wave
