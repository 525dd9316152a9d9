#include "talbot/photon/cz_gate.hpp"

#include <stdexcept>

#include "talbot/photon/sdbs.hpp"
#include "talbot/photon/two_photon_state.hpp"

namespace talbot::photon {

PostSelectedOperator build_cz(int dim, int k, bool apply_path_swap) {
    if (dim < 2 || k < 0 || k >= dim) {
        throw std::invalid_argument("build_cz: require D >= 2 and 0 <= k < D");
    }
    const int D = dim;

    std::vector<int> reflected;
    for (int d = 0; d < D; ++d) {
        if (d != k) {
            reflected.push_back(d);
        }
    }
    ComplexMatrix first = sdbs_mode_map(cz_entangling_spec(D, k));
    if (apply_path_swap) {
        first = path_swap(D, reflected) * first;
    }
    // A photon kept in its path by the filter picks up that path's transmission amplitude.
    const ComplexMatrix filter = sdbs_mode_map(cz_filter_spec(D, k));

    PostSelectedOperator op;
    op.dim = D;
    op.k = k;
    op.g = ComplexMatrix::Zero(D * D, D * D);
    op.success_prob.resize(static_cast<std::size_t>(D * D));
    op.path_swap_applied = apply_path_swap;
    if (apply_path_swap) {
        op.swapped_states = reflected;
    }

    for (int d = 0; d < D; ++d) {
        for (int f = 0; f < D; ++f) {
            const int col = d * D + f;
            const auto input = TwoPhotonState::product(D, Path::A, d, Path::B, f);
            const Coincidence c = post_select_coincidence(apply_mode_map(first, input));
            for (int dp = 0; dp < D; ++dp) {
                for (int fp = 0; fp < D; ++fp) {
                    const Complex ta = filter(mode_index(D, Path::A, dp), mode_index(D, Path::A, dp));
                    const Complex tb = filter(mode_index(D, Path::B, fp), mode_index(D, Path::B, fp));
                    op.g(dp * D + fp, col) = c.amplitudes(dp, fp) * ta * tb;
                }
            }
            op.success_prob[static_cast<std::size_t>(col)] = op.g.col(col).squaredNorm();
        }
    }

    op.corrections = extract_local_corrections(op.g, D, (k + 1) % D);
    op.corrected = apply_local_corrections(op.g, D, op.corrections);
    return op;
}

ComplexMatrix ideal_cz(int dim, int k) {
    ComplexMatrix m = ComplexMatrix::Identity(dim * dim, dim * dim);
    m(k * dim + k, k * dim + k) = -1.0;
    return m;
}

LocalCorrections extract_local_corrections(const ComplexMatrix& g, int dim, int reference) {
    if (g.rows() != dim * dim || g.cols() != dim * dim || reference < 0 || reference >= dim) {
        throw std::invalid_argument("extract_local_corrections: bad operator shape or reference");
    }
    auto phase = [&](int d, int f) { return std::arg(g(d * dim + f, d * dim + f)); };
    LocalCorrections c;
    c.reference = reference;
    c.global_phase = phase(reference, reference);
    c.alpha.resize(static_cast<std::size_t>(dim));
    c.beta.resize(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        c.alpha[static_cast<std::size_t>(d)] = wrap_phase(phase(d, reference) - c.global_phase);
        c.beta[static_cast<std::size_t>(d)] = wrap_phase(phase(reference, d) - c.global_phase);
    }
    return c;
}

ComplexMatrix apply_local_corrections(const ComplexMatrix& g, int dim, const LocalCorrections& c) {
    ComplexVector left(dim * dim);
    for (int d = 0; d < dim; ++d) {
        for (int f = 0; f < dim; ++f) {
            const double p = c.global_phase + c.alpha[static_cast<std::size_t>(d)] + c.beta[static_cast<std::size_t>(f)];
            left(d * dim + f) = std::polar(1.0, -p);
        }
    }
    return left.asDiagonal() * g;
}

}  // namespace talbot::photon
