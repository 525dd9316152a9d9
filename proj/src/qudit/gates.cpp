#include "talbot/qudit/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "talbot/qudit/gauss_sums.hpp"

namespace talbot::qudit {
namespace {

void require_dim(int dim, const char* who) {
    if (dim < 2) {
        throw std::invalid_argument(std::string(who) + ": D must be >= 2, got " + std::to_string(dim));
    }
}

std::vector<Complex> circular_convolve(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    const std::size_t n = a.size();
    std::vector<Complex> out(n, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[(i + j) % n] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

QuditMatrix pauli_shift(int dim, std::int64_t power) {
    require_dim(dim, "pauli_shift");
    const std::int64_t p = positive_mod(power, dim);
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        m(static_cast<Eigen::Index>((col + p) % dim), col) = 1.0;
    }
    return QuditMatrix(std::move(m));
}

Rational canonical_step(int dim) {
    require_dim(dim, "canonical_step");
    return dim % 2 == 0 ? Rational(1, 2 * dim) : Rational(1, dim);
}

std::int64_t step_period(int dim) {
    require_dim(dim, "step_period");
    return dim % 2 == 0 ? 2 * static_cast<std::int64_t>(dim) : dim;
}

std::vector<Complex> talbot_step_column(int dim) {
    require_dim(dim, "talbot_step_column");
    const Rational step = canonical_step(dim);
    const GaussCoefficients g = gauss_coefficients(step.num(), step.den());
    std::vector<Complex> column(static_cast<std::size_t>(dim));
    const std::size_t stride = dim % 2 == 0 ? 2 : 1;
    for (std::size_t d = 0; d < column.size(); ++d) {
        column[d] = g.values[d * stride];
    }
    return column;
}

QuditMatrix circulant(const std::vector<Complex>& column) {
    const auto n = static_cast<Eigen::Index>(column.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = column[static_cast<std::size_t>(((i - j) % n + n) % n)];
        }
    }
    return QuditMatrix(std::move(m));
}

QuditMatrix talbot_unitary(int dim, std::int64_t q) {
    require_dim(dim, "talbot_unitary");
    std::int64_t power = positive_mod(q, step_period(dim));
    std::vector<Complex> base = talbot_step_column(dim);
    std::vector<Complex> acc(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    acc[0] = 1.0;
    while (power > 0) {
        if (power & 1) {
            acc = circular_convolve(acc, base);
        }
        power >>= 1;
        if (power > 0) {
            base = circular_convolve(base, base);
        }
    }
    return circulant(acc);
}

QuditMatrix diagonal_gate(const PhaseVector& phases) {
    const int dim = phases.dim();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (int d = 0; d < dim; ++d) {
        m(d, d) = std::polar(1.0, phases[d]);
    }
    return QuditMatrix(std::move(m));
}

QuditMatrix qft_matrix(int dim) {
    require_dim(dim, "qft_matrix");
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix m(dim, dim);
    for (int d = 0; d < dim; ++d) {
        for (int j = 0; j < dim; ++j) {
            m(d, j) = scale * root_of_unity(-static_cast<long long>(j) * d, dim);
        }
    }
    return QuditMatrix(std::move(m));
}

PhaseVector clifford_phase_vector(int dim) {
    require_dim(dim, "clifford_phase_vector");
    std::vector<double> phases(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        phases[static_cast<std::size_t>(d)] = kPi * d * (d - 1) / dim;
    }
    return PhaseVector(std::move(phases));
}

}  // namespace talbot::qudit
