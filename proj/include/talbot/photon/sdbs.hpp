#pragma once

#include <vector>

#include "talbot/core/types.hpp"

namespace talbot::photon {

enum class Path { A = 0, B = 1 };

/// Single-photon mode index: path a holds 0 … D−1, path b holds D … 2D−1.
inline int mode_index(int dim, Path path, int state) { return (path == Path::A ? 0 : dim) + state; }

/// Spatially dependent beam splitter: amplitudes (t_d, r_d) per basis region.
struct SDBSSpec {
    int dim = 0;
    std::vector<Complex> t;
    std::vector<Complex> r;

    /// Throws std::invalid_argument unless sizes match and |t_d|² + |r_d|² = 1 within 1e−12.
    void validate() const;

    static SDBSSpec uniform(int dim, Complex t, Complex r);
};

/// 2D×2D single-photon map, column = input mode:
/// |d⟩_a → t_d|d⟩_a + i r_d|d⟩_b, |d⟩_b → i r_d|d⟩_a + t_d|d⟩_b.
ComplexMatrix sdbs_mode_map(const SDBSSpec& spec);

/// Exchanges paths a ↔ b for the listed internal states.
ComplexMatrix path_swap(int dim, const std::vector<int>& states);

/// First device of the controlled-phase circuit: t_k = 1/√3, r_k = √(2/3), full reflection elsewhere.
SDBSSpec cz_entangling_spec(int dim, int k);

/// Filter device: t_k = 1, r_k = 0, t_d = 1/√3, r_d = √(2/3) elsewhere.
SDBSSpec cz_filter_spec(int dim, int k);

}  // namespace talbot::photon
