#pragma once

#include <vector>

#include "talbot/core/types.hpp"

namespace talbot::photon {

/// G' = e^{−iγ} (Z_{−α} ⊗ Z_{−β}) G, with Z_φ = diag(e^{iφ_d}).
struct LocalCorrections {
    int reference = 0;  // basis state ρ used to read off the phases
    double global_phase = 0.0;
    std::vector<double> alpha;  // path a
    std::vector<double> beta;   // path b
};

/// Coincidence-post-selected two-quDit operator; rows and columns indexed d·D + f
/// for |d⟩_a|f⟩_b.
struct PostSelectedOperator {
    int dim = 0;
    int k = 0;
    ComplexMatrix g;
    std::vector<double> success_prob;  // per input column
    bool path_swap_applied = false;
    std::vector<int> swapped_states;  // states whose paths were relabelled a ↔ b
    LocalCorrections corrections;
    ComplexMatrix corrected;  // G'
};

/// Entangling SDBS, optional relabelling of fully reflected states, coincidence
/// post-selection, then a transmitting filter SDBS on each path.
PostSelectedOperator build_cz(int dim, int k, bool apply_path_swap = true);

/// diag over (d, f) with −1 at d = f = k.
ComplexMatrix ideal_cz(int dim, int k);

/// Reads local phases from the diagonal of G at reference ρ and applies them.
LocalCorrections extract_local_corrections(const ComplexMatrix& g, int dim, int reference);
ComplexMatrix apply_local_corrections(const ComplexMatrix& g, int dim, const LocalCorrections& c);

}  // namespace talbot::photon
