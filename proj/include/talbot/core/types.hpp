#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace talbot {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Tolerance ladder shared by every module.
inline constexpr double kAnalyticTol = 1e-12;
inline constexpr double kComposedTol = 1e-10;
inline constexpr double kCrossLayerTol = 1e-6;

/// e^{2πi k/n} with the exponent reduced exactly in integers first.
Complex root_of_unity(long long k, long long n);

/// Wraps an angle to (−π, π].
double wrap_phase(double angle);

}  // namespace talbot
