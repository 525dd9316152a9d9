#include "talbot/photon/sdbs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace talbot::photon {

void SDBSSpec::validate() const {
    if (dim < 1) {
        throw std::invalid_argument("SDBSSpec: dimension must be positive");
    }
    if (t.size() != static_cast<std::size_t>(dim) || r.size() != static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("SDBSSpec: need one (t, r) pair per basis state");
    }
    for (int d = 0; d < dim; ++d) {
        const double total = std::norm(t[static_cast<std::size_t>(d)]) + std::norm(r[static_cast<std::size_t>(d)]);
        if (std::abs(total - 1.0) > kAnalyticTol) {
            throw std::invalid_argument("SDBSSpec: |t|^2 + |r|^2 != 1 for state " + std::to_string(d));
        }
    }
}

SDBSSpec SDBSSpec::uniform(int dim, Complex t, Complex r) {
    return SDBSSpec{dim, std::vector<Complex>(static_cast<std::size_t>(dim), t),
                    std::vector<Complex>(static_cast<std::size_t>(dim), r)};
}

ComplexMatrix sdbs_mode_map(const SDBSSpec& spec) {
    spec.validate();
    const int D = spec.dim;
    ComplexMatrix v = ComplexMatrix::Zero(2 * D, 2 * D);
    for (int d = 0; d < D; ++d) {
        const Complex t = spec.t[static_cast<std::size_t>(d)];
        const Complex ir = kI * spec.r[static_cast<std::size_t>(d)];
        const int a = mode_index(D, Path::A, d);
        const int b = mode_index(D, Path::B, d);
        v(a, a) = t;
        v(b, a) = ir;
        v(a, b) = ir;
        v(b, b) = t;
    }
    return v;
}

ComplexMatrix path_swap(int dim, const std::vector<int>& states) {
    ComplexMatrix p = ComplexMatrix::Identity(2 * dim, 2 * dim);
    for (const int d : states) {
        if (d < 0 || d >= dim) {
            throw std::invalid_argument("path_swap: state out of range");
        }
        const int a = mode_index(dim, Path::A, d);
        const int b = mode_index(dim, Path::B, d);
        p(a, a) = 0.0;
        p(b, b) = 0.0;
        p(a, b) = 1.0;
        p(b, a) = 1.0;
    }
    return p;
}

SDBSSpec cz_entangling_spec(int dim, int k) {
    if (k < 0 || k >= dim) {
        throw std::invalid_argument("cz_entangling_spec: k out of range");
    }
    SDBSSpec s = SDBSSpec::uniform(dim, 0.0, 1.0);
    s.t[static_cast<std::size_t>(k)] = 1.0 / std::sqrt(3.0);
    s.r[static_cast<std::size_t>(k)] = std::sqrt(2.0 / 3.0);
    return s;
}

SDBSSpec cz_filter_spec(int dim, int k) {
    if (k < 0 || k >= dim) {
        throw std::invalid_argument("cz_filter_spec: k out of range");
    }
    SDBSSpec s = SDBSSpec::uniform(dim, 1.0 / std::sqrt(3.0), std::sqrt(2.0 / 3.0));
    s.t[static_cast<std::size_t>(k)] = 1.0;
    s.r[static_cast<std::size_t>(k)] = 0.0;
    return s;
}

}  // namespace talbot::photon
