#include "talbot/qudit/types.hpp"

#include <cmath>
#include <string>

namespace talbot::qudit {

QuditVector::QuditVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) {
        throw std::invalid_argument("QuditVector: empty amplitude vector");
    }
}

QuditVector QuditVector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw std::out_of_range("QuditVector::basis: index " + std::to_string(index) +
                                " outside dimension " + std::to_string(dim));
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v(index) = 1.0;
    return QuditVector(std::move(v));
}

QuditVector QuditVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::domain_error("QuditVector::normalized: zero vector");
    }
    return QuditVector(amplitudes_ / n);
}

QuditMatrix::QuditMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw std::invalid_argument("QuditMatrix: entries must be a nonempty square matrix");
    }
}

QuditMatrix QuditMatrix::identity(int dim) {
    return QuditMatrix(ComplexMatrix::Identity(dim, dim));
}

QuditMatrix QuditMatrix::operator*(const QuditMatrix& rhs) const {
    if (rhs.dim() != dim()) {
        throw std::invalid_argument("QuditMatrix: dimension mismatch in product");
    }
    return QuditMatrix(entries_ * rhs.entries_);
}

QuditVector QuditMatrix::operator*(const QuditVector& rhs) const {
    if (rhs.dim() != dim()) {
        throw std::invalid_argument("QuditMatrix: dimension mismatch in matrix-vector product");
    }
    return QuditVector(entries_ * rhs.amplitudes());
}

QuditMatrix QuditMatrix::adjoint() const { return QuditMatrix(entries_.adjoint()); }

double QuditMatrix::unitarity_defect() const {
    const ComplexMatrix defect = entries_ * entries_.adjoint() - ComplexMatrix::Identity(dim(), dim());
    return defect.cwiseAbs().maxCoeff();
}

double GaussCoefficients::norm_squared() const {
    double s = 0.0;
    for (const auto& a : values) {
        s += std::norm(a);
    }
    return s;
}

PhaseVector::PhaseVector(std::vector<double> phases) : phases_(std::move(phases)) {
    if (phases_.empty()) {
        throw std::invalid_argument("PhaseVector: empty");
    }
    for (double p : phases_) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("PhaseVector: non-finite phase");
        }
    }
}

PhaseVector PhaseVector::canonical() const {
    std::vector<double> out(phases_.size());
    for (std::size_t i = 0; i < phases_.size(); ++i) {
        double p = std::fmod(phases_[i], kTwoPi);
        if (p < 0) {
            p += kTwoPi;
        }
        if (p >= kTwoPi) {
            p = 0.0;
        }
        out[i] = p;
    }
    return PhaseVector(std::move(out));
}

}  // namespace talbot::qudit
