#pragma once

#include "talbot/core/types.hpp"
#include "talbot/photon/sdbs.hpp"

namespace talbot::photon {

/// Two indistinguishable photons over 2D modes: |ψ⟩ = (1/√2) Σ_{μν} S_{μν} a†_μ a†_ν |0⟩
/// with S symmetric. ⟨ψ|ψ⟩ is the squared Frobenius norm of S.
class TwoPhotonState {
public:
    TwoPhotonState(int dim, ComplexMatrix symmetric);

    /// Normalized |d1⟩_{p1}|d2⟩_{p2}; equal modes give the doubly occupied state.
    static TwoPhotonState product(int dim, Path p1, int d1, Path p2, int d2);
    /// Σ_{d,f} c(d, f) |d⟩_a|f⟩_b for a D×D amplitude matrix.
    static TwoPhotonState coincidence(const ComplexMatrix& amplitudes);

    int dim() const { return dim_; }
    const ComplexMatrix& tensor() const { return s_; }
    double norm() const { return s_.norm(); }

    /// Fock amplitude of one photon in μ and one in ν (μ = ν: both in μ).
    Complex fock_amplitude(int mu, int nu) const;

private:
    int dim_;
    ComplexMatrix s_;
};

/// S → V S Vᵀ for a single-photon map V on the 2D modes.
TwoPhotonState apply_mode_map(const ComplexMatrix& v, const TwoPhotonState& state);
TwoPhotonState apply_sdbs(const SDBSSpec& spec, const TwoPhotonState& state);

struct Coincidence {
    ComplexMatrix amplitudes;  // (d, f): photon d in a, photon f in b
    double probability = 0.0;
};
Coincidence post_select_coincidence(const TwoPhotonState& state);

struct OutcomeProbabilities {
    double coincidence = 0.0;
    double bunched_a = 0.0;
    double bunched_b = 0.0;
};
OutcomeProbabilities outcome_probabilities(const TwoPhotonState& state);

}  // namespace talbot::photon
