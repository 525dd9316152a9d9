#include "talbot/qudit/gauss_sums.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "talbot/core/rational.hpp"

namespace talbot::qudit {
namespace {

std::string coprime_message(std::int64_t q, std::int64_t r) {
    const std::int64_t g = std::gcd(q, r);
    return "gauss_coefficients: q=" + std::to_string(q) + " and r=" + std::to_string(r) +
           " share the factor " + std::to_string(g) + "; use q=" + std::to_string(q / g) +
           ", r=" + std::to_string(r / g);
}

}  // namespace

NonCoprimeError::NonCoprimeError(std::int64_t q, std::int64_t r)
    : std::invalid_argument(coprime_message(q, r)),
      reduced_q_(q / std::gcd(q, r)),
      reduced_r_(r / std::gcd(q, r)) {}

GaussCoefficients gauss_coefficients(std::int64_t q, std::int64_t r) {
    if (r <= 0) {
        throw std::invalid_argument("gauss_coefficients: r must be positive, got " + std::to_string(r));
    }
    if (std::gcd(q, r) != 1) {
        throw NonCoprimeError(q, r);
    }

    // Table of e^{−2πi k/r}, k = 0 … r−1.
    std::vector<Complex> roots(static_cast<std::size_t>(r));
    for (std::int64_t k = 0; k < r; ++k) {
        roots[static_cast<std::size_t>(k)] = root_of_unity(-k, r);
    }

    GaussCoefficients out{q, r, std::vector<Complex>(static_cast<std::size_t>(r))};
    for (std::int64_t j = 0; j < r; ++j) {
        Complex sum{0.0, 0.0};
        for (std::int64_t n = 0; n < r; ++n) {
            const std::int64_t quad = mul_mod(q, mul_mod(n, n, r), r);
            const std::int64_t lin = mul_mod(j, n, r);
            sum += roots[static_cast<std::size_t>(positive_mod(quad - lin, r))];
        }
        out.values[static_cast<std::size_t>(j)] = sum / static_cast<double>(r);
    }
    return out;
}

GaussCoefficients closed_form_even(int dim) {
    if (dim < 2 || dim % 2 != 0) {
        throw std::invalid_argument("closed_form_even: D must be even and >= 2, got " + std::to_string(dim));
    }
    const std::int64_t D = dim;
    const Complex prefactor = std::polar(1.0 / std::sqrt(static_cast<double>(D)), -kPi / 4.0);
    GaussCoefficients out{1, 2 * D, std::vector<Complex>(static_cast<std::size_t>(2 * D))};
    for (std::int64_t d = 0; d < D; ++d) {
        // e^{iπd²/D} = e^{2πi d² / (2D)}
        out.values[static_cast<std::size_t>(2 * d)] = prefactor * root_of_unity(mul_mod(d, d, 2 * D), 2 * D);
    }
    return out;
}

GaussCoefficients closed_form_odd(int dim) {
    if (dim < 3 || dim % 2 == 0) {
        throw std::invalid_argument("closed_form_odd: D must be odd and >= 3, got " + std::to_string(dim));
    }
    const std::int64_t D = dim;
    const std::int64_t half = (D + 1) / 2;
    const std::int64_t half_sq = mul_mod(half, half, D);
    const double symbol = static_cast<double>(jacobi_symbol(2, D));
    // e^{iπ(D−1)/4}: an eighth root of unity, (D−1)/4 needs exponent (D−1) over 8.
    const Complex prefactor =
        symbol * root_of_unity(D - 1, 8) / std::sqrt(static_cast<double>(D));
    GaussCoefficients out{1, D, std::vector<Complex>(static_cast<std::size_t>(D))};
    for (std::int64_t d = 0; d < D; ++d) {
        out.values[static_cast<std::size_t>(d)] = prefactor * root_of_unity(mul_mod(half_sq, mul_mod(d, d, D), D), D);
    }
    return out;
}

int jacobi_symbol(std::int64_t a, std::int64_t b) {
    if (b < 1 || b % 2 == 0) {
        throw std::invalid_argument("jacobi_symbol: b must be odd and positive, got " + std::to_string(b));
    }
    a = positive_mod(a, b);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t b8 = b % 8;
            if (b8 == 3 || b8 == 5) {
                result = -result;
            }
        }
        std::swap(a, b);
        if (a % 4 == 3 && b % 4 == 3) {
            result = -result;
        }
        a %= b;
    }
    return b == 1 ? result : 0;
}

}  // namespace talbot::qudit
