#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "talbot/photon/cz_gate.hpp"
#include "talbot/photon/phase_signature.hpp"
#include "talbot/photon/schmidt.hpp"
#include "talbot/photon/sdbs.hpp"
#include "talbot/photon/serialization.hpp"
#include "talbot/photon/two_photon_state.hpp"

using namespace talbot;
using namespace talbot::photon;

namespace {

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = {g(rng), g(rng)};
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(m);
    return qr.householderQ();
}

// Expands a†_μ a†_ν → (Σ_α V_αμ a†_α)(Σ_β V_βν a†_β) monomial by monomial and returns
// Fock amplitudes keyed by the sorted mode pair.
std::map<std::pair<int, int>, Complex> expand_creation_operators(const ComplexMatrix& v, int mu, int nu) {
    const double input_norm = mu == nu ? 1.0 / std::sqrt(2.0) : 1.0;
    std::map<std::pair<int, int>, Complex> coeff;
    for (int a = 0; a < v.rows(); ++a) {
        for (int b = 0; b < v.rows(); ++b) {
            coeff[{std::min(a, b), std::max(a, b)}] += input_norm * v(a, mu) * v(b, nu);
        }
    }
    for (auto& [key, c] : coeff) {
        if (key.first == key.second) {
            c *= std::sqrt(2.0);  // a†²|0⟩ = √2|2⟩
        }
    }
    return coeff;
}

ComplexMatrix random_phase_diagonal(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    std::vector<double> pa(static_cast<std::size_t>(dim));
    std::vector<double> pb(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        pa[static_cast<std::size_t>(d)] = u(rng);
        pb[static_cast<std::size_t>(d)] = u(rng);
    }
    ComplexMatrix m = ComplexMatrix::Zero(dim * dim, dim * dim);
    for (int d = 0; d < dim; ++d) {
        for (int f = 0; f < dim; ++f) {
            m(d * dim + f, d * dim + f) =
                std::polar(1.0, pa[static_cast<std::size_t>(d)] + pb[static_cast<std::size_t>(f)]);
        }
    }
    return m;
}

}  // namespace

TEST(Sdbs, UniformSplitterIsUnitary) {
    const ComplexMatrix v = sdbs_mode_map(SDBSSpec::uniform(3, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)));
    EXPECT_LT((v.adjoint() * v - ComplexMatrix::Identity(6, 6)).norm(), 1e-14);
}

TEST(Sdbs, ModeMapConvention) {
    const ComplexMatrix v = sdbs_mode_map(cz_entangling_spec(3, 1));
    const double t = 1.0 / std::sqrt(3.0);
    const double r = std::sqrt(2.0 / 3.0);
    EXPECT_LT(std::abs(v(mode_index(3, Path::A, 1), mode_index(3, Path::A, 1)) - t), 1e-15);
    EXPECT_LT(std::abs(v(mode_index(3, Path::B, 1), mode_index(3, Path::A, 1)) - Complex(0, r)), 1e-15);
    EXPECT_LT(std::abs(v(mode_index(3, Path::B, 0), mode_index(3, Path::A, 0)) - Complex(0, 1)), 1e-15);
    EXPECT_LT(std::abs(v(mode_index(3, Path::A, 0), mode_index(3, Path::A, 0))), 1e-15);
}

TEST(Sdbs, FilterAndEntanglingSpecsAreValid) {
    for (int D = 2; D <= 6; ++D) {
        for (int k = 0; k < D; ++k) {
            EXPECT_NO_THROW(cz_entangling_spec(D, k).validate());
            EXPECT_NO_THROW(cz_filter_spec(D, k).validate());
        }
    }
}

TEST(Sdbs, RejectsNonUnitarySplit) {
    EXPECT_THROW(SDBSSpec::uniform(2, 1.0, 1.0).validate(), std::invalid_argument);
    SDBSSpec bad = SDBSSpec::uniform(2, 1.0, 0.0);
    bad.t.pop_back();
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(PathSwap, ExchangesOnlyListedStates) {
    const ComplexMatrix p = path_swap(3, {0, 2});
    EXPECT_EQ(p(mode_index(3, Path::B, 0), mode_index(3, Path::A, 0)), Complex(1.0));
    EXPECT_EQ(p(mode_index(3, Path::A, 1), mode_index(3, Path::A, 1)), Complex(1.0));
    EXPECT_LT((p * p - ComplexMatrix::Identity(6, 6)).norm(), 1e-15);
}

TEST(TwoPhoton, HongOuMandelDip) {
    const auto in = TwoPhotonState::product(1, Path::A, 0, Path::B, 0);
    const auto out = apply_sdbs(SDBSSpec::uniform(1, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)), in);
    const auto p = outcome_probabilities(out);
    EXPECT_LT(p.coincidence, 1e-15);
    EXPECT_NEAR(p.bunched_a, 0.5, 1e-15);
    EXPECT_NEAR(p.bunched_b, 0.5, 1e-15);
}

TEST(TwoPhoton, ModeMapMatchesCreationOperatorExpansion) {
    const int dim = 2;
    const ComplexMatrix v = random_unitary(2 * dim, 3);
    for (int mu = 0; mu < 2 * dim; ++mu) {
        for (int nu = mu; nu < 2 * dim; ++nu) {
            const Path p1 = mu < dim ? Path::A : Path::B;
            const Path p2 = nu < dim ? Path::A : Path::B;
            const auto out = apply_mode_map(v, TwoPhotonState::product(dim, p1, mu % dim, p2, nu % dim));
            for (const auto& [key, c] : expand_creation_operators(v, mu, nu)) {
                EXPECT_LT(std::abs(out.fock_amplitude(key.first, key.second) - c), 1e-13)
                    << mu << nu << " -> " << key.first << key.second;
            }
        }
    }
}

TEST(TwoPhoton, EntanglingSplitterOnMatchedState) {
    // |k⟩_a|k⟩_b: coincidence amplitude t² − r² = −1/3, bunched amplitudes i√2·t·r each.
    const int dim = 3;
    const int k = 1;
    const auto out = apply_sdbs(cz_entangling_spec(dim, k), TwoPhotonState::product(dim, Path::A, k, Path::B, k));
    const int a = mode_index(dim, Path::A, k);
    const int b = mode_index(dim, Path::B, k);
    EXPECT_LT(std::abs(out.fock_amplitude(a, b) - Complex(-1.0 / 3.0)), 1e-15);
    const Complex bunched(0.0, std::sqrt(2.0) * std::sqrt(2.0) / 3.0);
    EXPECT_LT(std::abs(out.fock_amplitude(a, a) - bunched), 1e-15);
    EXPECT_LT(std::abs(out.fock_amplitude(b, b) - bunched), 1e-15);
    EXPECT_NEAR(out.norm(), 1.0, 1e-15);
}

TEST(TwoPhoton, EntanglingSplitterOnMismatchedState) {
    // |k⟩_a|f⟩_b, f ≠ k: photon f is reflected into a, photon k splits.
    const int dim = 3;
    const auto out = apply_sdbs(cz_entangling_spec(dim, 0), TwoPhotonState::product(dim, Path::A, 0, Path::B, 2));
    const double t = 1.0 / std::sqrt(3.0);
    const double r = std::sqrt(2.0 / 3.0);
    EXPECT_LT(std::abs(out.fock_amplitude(mode_index(dim, Path::A, 0), mode_index(dim, Path::A, 2)) -
                       Complex(0, t)), 1e-15);
    EXPECT_LT(std::abs(out.fock_amplitude(mode_index(dim, Path::B, 0), mode_index(dim, Path::A, 2)) -
                       Complex(-r, 0)), 1e-15);
}

TEST(TwoPhoton, EvolutionKeepsSymmetryAndNorm) {
    const ComplexMatrix v = random_unitary(6, 9);
    const auto out = apply_mode_map(v, TwoPhotonState::product(3, Path::A, 0, Path::A, 2));
    EXPECT_NEAR(out.norm(), 1.0, 1e-14);
    EXPECT_LT((out.tensor() - out.tensor().transpose()).norm(), 1e-14);
    const auto p = outcome_probabilities(out);
    EXPECT_NEAR(p.coincidence + p.bunched_a + p.bunched_b, 1.0, 1e-14);
}

TEST(TwoPhoton, RejectsAsymmetricTensor) {
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    s(0, 1) = 1.0;
    EXPECT_THROW(TwoPhotonState(2, s), std::invalid_argument);
}

TEST(PostSelection, ProductStateCoincidence) {
    const auto c = post_select_coincidence(TwoPhotonState::product(3, Path::A, 2, Path::B, 1));
    EXPECT_NEAR(c.probability, 1.0, 1e-15);
    EXPECT_LT(std::abs(c.amplitudes(2, 1) - 1.0), 1e-15);
    EXPECT_NEAR(post_select_coincidence(TwoPhotonState::product(3, Path::A, 2, Path::A, 1)).probability, 0.0, 0.0);
}

TEST(PostSelection, CoincidenceStateRoundTrip) {
    ComplexMatrix c = ComplexMatrix::Zero(2, 2);
    c(0, 0) = 1.0 / std::sqrt(2.0);
    c(1, 1) = Complex(0, 1.0 / std::sqrt(2.0));
    const auto back = post_select_coincidence(TwoPhotonState::coincidence(c));
    EXPECT_LT((back.amplitudes - c).norm(), 1e-15);
}

TEST(CzGate, UniformModuliAndSuccess) {
    for (int D = 2; D <= 8; ++D) {
        for (int k = 0; k < D; ++k) {
            const auto op = build_cz(D, k);
            EXPECT_LT(std::abs(op.g.norm() * op.g.norm() - (D * D) / 9.0), 1e-12);
            for (int i = 0; i < D * D; ++i) {
                EXPECT_NEAR(std::abs(op.g(i, i)), 1.0 / 3.0, 1e-14);
                EXPECT_NEAR(op.success_prob[static_cast<std::size_t>(i)], 1.0 / 9.0, 1e-14);
            }
            EXPECT_LT(op.g.norm() - op.g.diagonal().norm(), 1e-14);
            EXPECT_TRUE(op.path_swap_applied);
            EXPECT_EQ(op.swapped_states.size(), static_cast<std::size_t>(D - 1));
        }
    }
}

TEST(CzGate, CorrectedOperatorIsScaledIdealGate) {
    for (int D = 2; D <= 8; ++D) {
        for (int k = 0; k < D; ++k) {
            const auto op = build_cz(D, k);
            EXPECT_LT((op.corrected - ideal_cz(D, k) / 3.0).cwiseAbs().maxCoeff(), 1e-14) << D << "," << k;
        }
    }
}

TEST(CzGate, SignatureMatchesIdealGate) {
    for (int D = 2; D <= 8; ++D) {
        for (int k = 0; k < D; ++k) {
            const auto chi = interaction_phase_signature(build_cz(D, k).g, D);
            EXPECT_LT(signature_distance(chi, interaction_phase_signature(ideal_cz(D, k), D)), 1e-9);
        }
    }
}

TEST(CzGate, QutritExampleDiagonal) {
    const auto op = build_cz(3, 1);
    EXPECT_LT(std::abs(op.g(4, 4) - Complex(-1.0 / 3.0)), 1e-15);  // |1⟩|1⟩
    EXPECT_LT(std::abs(op.g(3, 3) - Complex(0, 1.0 / 3.0)), 1e-15);  // |1⟩|0⟩
    EXPECT_LT(std::abs(op.g(1, 1) - Complex(0, 1.0 / 3.0)), 1e-15);  // |0⟩|1⟩
    EXPECT_LT(std::abs(op.g(0, 0) - Complex(-1.0 / 3.0)), 1e-15);
    EXPECT_EQ(op.corrections.reference, 2);
}

TEST(CzGate, WithoutPathSwapIsNotDiagonal) {
    const auto op = build_cz(3, 1, false);
    EXPECT_FALSE(op.path_swap_applied);
    EXPECT_THROW(interaction_phase_signature(op.g, 3), NonDiagonalError);
}

TEST(CzGate, RejectsBadArguments) {
    EXPECT_THROW(build_cz(1, 0), std::invalid_argument);
    EXPECT_THROW(build_cz(3, 3), std::invalid_argument);
}

TEST(PhaseSignature, IdentityIsZero) {
    const auto chi = interaction_phase_signature(ComplexMatrix::Identity(9, 9), 3);
    EXPECT_LT(chi.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PhaseSignature, IdealGateHasPiAtControl) {
    const auto chi = interaction_phase_signature(ideal_cz(4, 2), 4);
    for (int d = 0; d < 4; ++d) {
        for (int f = 0; f < 4; ++f) {
            EXPECT_NEAR(std::abs(chi(d, f)), (d == 2 && f == 2) ? kPi : 0.0, 1e-15);
        }
    }
}

TEST(PhaseSignature, InvariantUnderLocalPhases) {
    for (int D = 2; D <= 5; ++D) {
        const ComplexMatrix g = ideal_cz(D, D - 1);
        const auto chi = interaction_phase_signature(g, D);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const ComplexMatrix moved = random_phase_diagonal(D, seed) * g * std::polar(1.0, 0.3 * seed);
            EXPECT_LT(signature_distance(interaction_phase_signature(moved, D), chi), 1e-12);
        }
    }
}

TEST(PhaseSignature, RejectsNonUniformModuli) {
    ComplexMatrix g = ComplexMatrix::Identity(4, 4);
    g(3, 3) = 0.5;
    EXPECT_THROW(interaction_phase_signature(g, 2), std::invalid_argument);
}

TEST(PhaseSignature, NonDiagonalErrorCarriesNorm) {
    ComplexMatrix g = ComplexMatrix::Identity(4, 4);
    g(0, 1) = 0.25;
    try {
        interaction_phase_signature(g, 2);
        FAIL() << "expected NonDiagonalError";
    } catch (const NonDiagonalError& e) {
        EXPECT_NEAR(e.off_diagonal_norm(), 0.25, 1e-15);
    }
}

TEST(Schmidt, ProductAndMaximallyEntangled) {
    ComplexMatrix product = ComplexMatrix::Zero(3, 3);
    product(1, 2) = 1.0;
    const auto s1 = schmidt_coefficients(product);
    EXPECT_NEAR(s1[0], 1.0, 1e-15);
    EXPECT_NEAR(s1[1], 0.0, 1e-15);
    const ComplexMatrix bell = ComplexMatrix::Identity(3, 3) / std::sqrt(3.0);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(schmidt_coefficients(bell)[i], 1.0 / std::sqrt(3.0), 1e-15);
    }
}

TEST(Schmidt, CorrectedCzEntanglesPlusStates) {
    // CZ_1 on |+⟩|+⟩ for D = 2 is maximally entangled.
    const ComplexMatrix g = build_cz(2, 1).corrected * 3.0;
    Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(4, 0.5);
    const Eigen::VectorXcd out = g * plus;
    ComplexMatrix c(2, 2);
    for (int d = 0; d < 2; ++d) {
        for (int f = 0; f < 2; ++f) {
            c(d, f) = out(d * 2 + f);
        }
    }
    const auto s = schmidt_coefficients(c);
    EXPECT_NEAR(s[0], 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(s[1], 1.0 / std::sqrt(2.0), 1e-14);
}

TEST(PhotonSerialization, OperatorFields) {
    const auto j = to_json(build_cz(3, 0));
    EXPECT_EQ(j.at("qudit_dim"), 3);
    EXPECT_EQ(j.at("k"), 0);
    EXPECT_EQ(j.at("dim"), 9);
    EXPECT_EQ(j.at("entries").size(), 9u);
    EXPECT_EQ(j.at("success_prob").size(), 9u);
    EXPECT_TRUE(j.at("path_swap_applied").get<bool>());
    EXPECT_EQ(j.at("swapped_states").size(), 2u);
    EXPECT_TRUE(j.at("local_corrections").contains("alpha"));
    EXPECT_EQ(j.at("corrected").size(), 9u);
}
