#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "talbot/core/types.hpp"

namespace talbot::qudit {

/// State of a single Talbot quDit in the computational basis |0_D⟩ … |(D−1)_D⟩.
class QuditVector {
public:
    explicit QuditVector(ComplexVector amplitudes);
    static QuditVector basis(int dim, int index);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    Complex operator[](int i) const { return amplitudes_(i); }

    double norm() const { return amplitudes_.norm(); }
    QuditVector normalized() const;

private:
    ComplexVector amplitudes_;
};

/// D×D gate in the computational basis.
class QuditMatrix {
public:
    explicit QuditMatrix(ComplexMatrix entries);
    static QuditMatrix identity(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const ComplexMatrix& entries() const { return entries_; }
    Complex operator()(int row, int col) const { return entries_(row, col); }

    QuditMatrix operator*(const QuditMatrix& rhs) const;
    QuditVector operator*(const QuditVector& rhs) const;
    QuditMatrix adjoint() const;

    /// Max elementwise |M M† − I|.
    double unitarity_defect() const;
    bool is_unitary(double tol = kComposedTol) const { return unitarity_defect() <= tol; }

private:
    ComplexMatrix entries_;
};

/// Replica amplitudes a_0 … a_{r−1} for propagation by q/r (twice the Talbot length units).
struct GaussCoefficients {
    std::int64_t q = 0;
    std::int64_t r = 1;
    std::vector<Complex> values;

    double norm_squared() const;
};

/// Phases φ_0 … φ_{D−1} in radians.
class PhaseVector {
public:
    explicit PhaseVector(std::vector<double> phases);
    static PhaseVector zeros(int dim) { return PhaseVector(std::vector<double>(dim, 0.0)); }

    int dim() const { return static_cast<int>(phases_.size()); }
    const std::vector<double>& phases() const { return phases_; }
    double operator[](int i) const { return phases_[static_cast<std::size_t>(i)]; }

    /// Every phase mapped into [0, 2π).
    PhaseVector canonical() const;

private:
    std::vector<double> phases_;
};

}  // namespace talbot::qudit
