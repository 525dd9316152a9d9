#include "talbot/photon/two_photon_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace talbot::photon {

TwoPhotonState::TwoPhotonState(int dim, ComplexMatrix symmetric) : dim_(dim), s_(std::move(symmetric)) {
    if (dim_ < 1 || s_.rows() != 2 * dim_ || s_.cols() != 2 * dim_) {
        throw std::invalid_argument("TwoPhotonState: tensor must be 2D x 2D");
    }
    if ((s_ - s_.transpose()).cwiseAbs().maxCoeff() > kAnalyticTol) {
        throw std::invalid_argument("TwoPhotonState: tensor must be symmetric");
    }
    s_ = 0.5 * (s_ + s_.transpose()).eval();
}

TwoPhotonState TwoPhotonState::product(int dim, Path p1, int d1, Path p2, int d2) {
    if (d1 < 0 || d1 >= dim || d2 < 0 || d2 >= dim) {
        throw std::invalid_argument("TwoPhotonState::product: state out of range");
    }
    const int mu = mode_index(dim, p1, d1);
    const int nu = mode_index(dim, p2, d2);
    ComplexMatrix s = ComplexMatrix::Zero(2 * dim, 2 * dim);
    if (mu == nu) {
        s(mu, mu) = 1.0;
    } else {
        s(mu, nu) = std::numbers::sqrt2 / 2.0;
        s(nu, mu) = std::numbers::sqrt2 / 2.0;
    }
    return TwoPhotonState(dim, std::move(s));
}

TwoPhotonState TwoPhotonState::coincidence(const ComplexMatrix& amplitudes) {
    if (amplitudes.rows() != amplitudes.cols() || amplitudes.rows() < 1) {
        throw std::invalid_argument("TwoPhotonState::coincidence: need a square amplitude matrix");
    }
    const int dim = static_cast<int>(amplitudes.rows());
    ComplexMatrix s = ComplexMatrix::Zero(2 * dim, 2 * dim);
    s.topRightCorner(dim, dim) = amplitudes / std::numbers::sqrt2;
    s.bottomLeftCorner(dim, dim) = amplitudes.transpose() / std::numbers::sqrt2;
    return TwoPhotonState(dim, std::move(s));
}

Complex TwoPhotonState::fock_amplitude(int mu, int nu) const {
    return mu == nu ? s_(mu, mu) : std::numbers::sqrt2 * s_(mu, nu);
}

TwoPhotonState apply_mode_map(const ComplexMatrix& v, const TwoPhotonState& state) {
    if (v.rows() != state.tensor().rows() || v.cols() != state.tensor().cols()) {
        throw std::invalid_argument("apply_mode_map: map size does not match the state");
    }
    ComplexMatrix s = v * state.tensor() * v.transpose();
    return TwoPhotonState(state.dim(), 0.5 * (s + s.transpose()));
}

TwoPhotonState apply_sdbs(const SDBSSpec& spec, const TwoPhotonState& state) {
    if (spec.dim != state.dim()) {
        throw std::invalid_argument("apply_sdbs: dimension mismatch");
    }
    return apply_mode_map(sdbs_mode_map(spec), state);
}

Coincidence post_select_coincidence(const TwoPhotonState& state) {
    const int D = state.dim();
    Coincidence c;
    c.amplitudes = std::numbers::sqrt2 * state.tensor().topRightCorner(D, D);
    c.probability = c.amplitudes.squaredNorm();
    return c;
}

OutcomeProbabilities outcome_probabilities(const TwoPhotonState& state) {
    const int D = state.dim();
    const ComplexMatrix& s = state.tensor();
    OutcomeProbabilities p;
    p.coincidence = 2.0 * s.topRightCorner(D, D).squaredNorm();
    p.bunched_a = s.topLeftCorner(D, D).squaredNorm();
    p.bunched_b = s.bottomRightCorner(D, D).squaredNorm();
    return p;
}

}  // namespace talbot::photon
