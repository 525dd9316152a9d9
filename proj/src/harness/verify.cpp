#include "talbot/harness/verify.hpp"

#include <algorithm>
#include <cmath>

#include "talbot/core/numeric_format.hpp"
#include "talbot/photon/cz_gate.hpp"
#include "talbot/photon/phase_signature.hpp"
#include "talbot/photon/schmidt.hpp"
#include "talbot/qudit/gates.hpp"
#include "talbot/qudit/gauss_sums.hpp"
#include "talbot/qudit/matrix_compare.hpp"
#include "talbot/qudit/qft.hpp"
#include "talbot/wave/crosscheck.hpp"

namespace talbot::harness {

namespace {

using qudit::QuditMatrix;

constexpr int kMinDim = 2;
constexpr int kMaxDim = 12;

class Collector {
public:
    void add(std::string name, double residual, double tolerance) {
        checks_.push_back({std::move(name), residual, tolerance, residual <= tolerance});
    }
    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    std::vector<CheckResult> checks_;
};

std::string tag(const char* what, int dim) { return std::string(what) + " D=" + std::to_string(dim); }

double max_coefficient_gap(const qudit::GaussCoefficients& a, const qudit::GaussCoefficients& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    }
    return worst;
}

std::vector<CheckResult> algebra_suite() {
    Collector c;
    for (int D = kMinDim; D <= kMaxDim; ++D) {
        const std::int64_t r = qudit::step_period(D);
        const QuditMatrix u = qudit::talbot_unitary(D, 1);
        double worst_unitarity = 0.0;
        for (std::int64_t q = 0; q <= 4 * r * D; ++q) {
            worst_unitarity = std::max(worst_unitarity, qudit::talbot_unitary(D, q).unitarity_defect());
        }
        c.add(tag("unitarity q in [0, 4rD]", D), worst_unitarity, kComposedTol);

        double circulant_gap = 0.0;
        for (int i = 0; i < D; ++i) {
            for (int j = 0; j < D; ++j) {
                circulant_gap = std::max(circulant_gap, std::abs(u((i + 1) % D, (j + 1) % D) - u(i, j)));
            }
        }
        c.add(tag("circulant structure", D), circulant_gap, 0.0);

        QuditMatrix power = QuditMatrix::identity(D);
        for (std::int64_t s = 0; s < r; ++s) {
            power = power * u;
        }
        c.add(tag("cycle (step)^r = I", D),
              qudit::max_abs_difference(power.entries(), QuditMatrix::identity(D).entries()), kComposedTol);

        double group_gap = 0.0;
        double commutator = 0.0;
        for (std::int64_t a = 0; a < r; ++a) {
            for (std::int64_t b = 0; b < r; ++b) {
                const QuditMatrix ua = qudit::talbot_unitary(D, a);
                const QuditMatrix ub = qudit::talbot_unitary(D, b);
                group_gap = std::max(group_gap, qudit::max_abs_difference((ua * ub).entries(),
                                                                          qudit::talbot_unitary(D, a + b).entries()));
                commutator = std::max(commutator, qudit::max_abs_difference((ua * ub).entries(), (ub * ua).entries()));
            }
        }
        c.add(tag("group law U_a U_b = U_(a+b)", D), group_gap, kComposedTol);
        c.add(tag("commutation [U_a, U_b] = 0", D), commutator, kComposedTol);

        if (D % 2 == 0) {
            QuditMatrix half = QuditMatrix::identity(D);
            for (int s = 0; s < D; ++s) {
                half = half * u;
            }
            c.add(tag("half shift (step)^D = X^(D/2)", D),
                  qudit::max_abs_difference(half.entries(), qudit::pauli_shift(D, D / 2).entries()), kComposedTol);
            c.add(tag("even closed form vs Gauss sum", D),
                  max_coefficient_gap(qudit::closed_form_even(D), qudit::gauss_coefficients(1, 2 * D)), kAnalyticTol);
        } else {
            const auto closed = qudit::closed_form_odd(D);
            const auto generic = qudit::gauss_coefficients(1, D);
            Complex overlap{0.0, 0.0};
            for (std::size_t i = 0; i < closed.values.size(); ++i) {
                overlap += std::conj(generic.values[i]) * closed.values[i];
            }
            const Complex unit = std::polar(1.0, -std::arg(overlap));
            double gap = 0.0;
            for (std::size_t i = 0; i < closed.values.size(); ++i) {
                gap = std::max(gap, std::abs(closed.values[i] * unit - generic.values[i]));
            }
            c.add(tag("odd closed form vs Gauss sum (global phase)", D), gap, kAnalyticTol);
        }

        const auto gauss = qudit::gauss_coefficients(1, r);
        c.add(tag("Gauss coefficient norm", D), std::abs(gauss.norm_squared() - 1.0), kAnalyticTol);

        const QuditMatrix f = qudit::qft_matrix(D);
        c.add(tag("F U F^dagger diagonal", D), qudit::max_off_diagonal((f * u * f.adjoint()).entries()),
              kComposedTol);
    }
    return c.take();
}

std::vector<CheckResult> qft_suite() {
    Collector c;
    for (int D = kMinDim; D <= kMaxDim; ++D) {
        if (D % 2 == 0) {
            c.add(tag("even QFT decomposition", D), qudit::qft_decomposition_even(D).report.residual, kComposedTol);
        } else {
            const auto odd = qudit::qft_decomposition_odd(D);
            c.add(tag("odd QFT decomposition", D), odd.report.residual, kComposedTol);
        }
    }
    const QuditMatrix h{ComplexMatrix{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)},
                                      {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}}};
    c.add("Hadamard U_1/4 Z_pi/4 U_1/4 = H", qudit::max_abs_difference(qudit::hadamard_via_talbot().entries(), h.entries()),
          kAnalyticTol);
    c.add("Hadamard half distance (global phase)",
          qudit::compare_up_to_global_phase(qudit::hadamard_half_distance().entries(), h.entries()).max_deviation,
          kComposedTol);
    const double theta = kPi / 2.7;
    const auto prep = qudit::prepare_bloch_state(theta, kPi / 2.0);
    c.add("Bloch preparation |<0|psi>| = |cos theta|", std::abs(std::abs(prep.state[0]) - std::abs(std::cos(theta))),
          kComposedTol);
    return c.take();
}

std::vector<CheckResult> crosscheck_suite() {
    Collector c;
    for (int D = 2; D <= 5; ++D) {
        const auto report = wave::gate_crosscheck(D, 1);
        c.add(tag("wave vs matrix deviation", D), report.max_deviation, kCrossLayerTol);
        c.add(tag("basis projection residual", D), report.max_projection_residual, 1e-4);
    }
    return c.take();
}

std::vector<CheckResult> czgate_suite() {
    Collector c;
    for (int D = kMinDim; D <= kMaxDim; ++D) {
        double modulus_gap = 0.0;
        double success_gap = 0.0;
        double chi_gap = 0.0;
        for (int k = 0; k < D; ++k) {
            const auto op = photon::build_cz(D, k);
            for (Eigen::Index i = 0; i < op.g.rows(); ++i) {
                modulus_gap = std::max(modulus_gap, std::abs(std::abs(op.g(i, i)) - 1.0 / 3.0));
            }
            for (const double p : op.success_prob) {
                success_gap = std::max(success_gap, std::abs(p - 1.0 / 9.0));
            }
            const auto chi = photon::interaction_phase_signature(op.g, D);
            const auto ideal = photon::interaction_phase_signature(photon::ideal_cz(D, k), D);
            chi_gap = std::max(chi_gap, photon::signature_distance(chi, ideal));
        }
        c.add(tag("retained amplitude modulus 1/3", D), modulus_gap, kComposedTol);
        c.add(tag("success probability 1/9", D), success_gap, kComposedTol);
        c.add(tag("interaction signature matches CZ_k", D), chi_gap, 1e-9);
    }
    const auto op = photon::build_cz(2, 1);
    ComplexVector plus(4);
    plus.setConstant(0.5);
    const ComplexVector out = (op.g * plus).normalized();
    ComplexMatrix amplitudes(2, 2);
    amplitudes << out(0), out(1), out(2), out(3);
    const Eigen::VectorXd s = photon::schmidt_coefficients(amplitudes);
    const double target = 1.0 / std::sqrt(2.0);
    c.add("Schmidt coefficients D=2 (1/sqrt2, 1/sqrt2)", std::max(std::abs(s(0) - target), std::abs(s(1) - target)),
          1e-9);
    return c.take();
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

UnknownSuiteError::UnknownSuiteError(const std::string& name)
    : std::invalid_argument("unknown verification suite '" + name + "' (expected algebra, qft, crosscheck or czgate)") {}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra", "qft", "crosscheck", "czgate"};
    return names;
}

VerifyReport run_suite(const std::string& name) {
    VerifyReport r;
    r.suite = name;
    if (name == "algebra") {
        r.checks = algebra_suite();
    } else if (name == "qft") {
        r.checks = qft_suite();
    } else if (name == "crosscheck") {
        r.checks = crosscheck_suite();
    } else if (name == "czgate") {
        r.checks = czgate_suite();
    } else {
        throw UnknownSuiteError(name);
    }
    return r;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    return {{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

std::string to_text(const VerifyReport& report) {
    std::string out;
    std::size_t failures = 0;
    for (const auto& c : report.checks) {
        out += c.pass ? "PASS  " : "FAIL  ";
        out += c.name + "  residual=" + format_double(c.residual) + "  tol=" + format_double(c.tolerance) + "\n";
        failures += c.pass ? 0 : 1;
    }
    out += report.suite + ": " + std::to_string(report.checks.size() - failures) + "/" +
           std::to_string(report.checks.size()) + " checks passed\n";
    return out;
}

}  // namespace talbot::harness
