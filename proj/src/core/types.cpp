#include "talbot/core/types.hpp"

#include <cmath>

namespace talbot {

Complex root_of_unity(long long k, long long n) {
    long long r = k % n;
    if (r < 0) {
        r += n;
    }
    if (r == 0) {
        return {1.0, 0.0};
    }
    // Fold into (−n/2, n/2] so the angle stays small and symmetric.
    if (2 * r > n) {
        r -= n;
    }
    const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

double wrap_phase(double angle) {
    double w = std::remainder(angle, kTwoPi);
    if (w <= -kPi) {
        w += kTwoPi;
    }
    return w;
}

}  // namespace talbot
