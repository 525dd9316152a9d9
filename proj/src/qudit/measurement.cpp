#include "talbot/qudit/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "talbot/core/numeric_format.hpp"

namespace talbot::qudit {

std::vector<double> measure_probabilities(const QuditVector& state) {
    const double n = state.norm();
    if (std::abs(n - 1.0) > 1e-9) {
        throw std::invalid_argument("measure_probabilities: state norm " + format_double(n) + " is not 1");
    }
    std::vector<double> p(static_cast<std::size_t>(state.dim()));
    for (int d = 0; d < state.dim(); ++d) {
        p[static_cast<std::size_t>(d)] = std::norm(state[d]);
    }
    return p;
}

std::vector<std::uint64_t> sample(const QuditVector& state, std::uint64_t n, std::uint64_t seed) {
    const std::vector<double> p = measure_probabilities(state);
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> counts(p.size(), 0);
    for (std::uint64_t k = 0; k < n; ++k) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        ++counts[static_cast<std::size_t>(it - cdf.begin())];
    }
    return counts;
}

}  // namespace talbot::qudit
