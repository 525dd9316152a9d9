#include "talbot/qudit/serialization.hpp"

#include <stdexcept>

namespace talbot::qudit {
namespace {

nlohmann::json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const nlohmann::json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(complex_to_json(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const auto dim = j.at("dim").get<Eigen::Index>();
    const auto& rows = j.at("entries");
    if (static_cast<Eigen::Index>(rows.size()) != dim) {
        throw std::invalid_argument("matrix_from_json: row count does not match dim");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& row = rows.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != dim) {
            throw std::invalid_argument("matrix_from_json: row length does not match dim");
        }
        for (Eigen::Index k = 0; k < dim; ++k) {
            m(i, k) = complex_from_json(row.at(static_cast<std::size_t>(k)));
        }
    }
    return m;
}

nlohmann::json to_json(const QuditMatrix& m) { return matrix_to_json(m.entries()); }

QuditMatrix quditmatrix_from_json(const nlohmann::json& j) { return QuditMatrix(matrix_from_json(j)); }

nlohmann::json to_json(const QuditVector& v) {
    nlohmann::json amps = nlohmann::json::array();
    for (int d = 0; d < v.dim(); ++d) {
        amps.push_back(complex_to_json(v[d]));
    }
    return {{"dim", v.dim()}, {"amplitudes", std::move(amps)}};
}

QuditVector quditvector_from_json(const nlohmann::json& j) {
    const auto dim = j.at("dim").get<Eigen::Index>();
    const auto& amps = j.at("amplitudes");
    if (static_cast<Eigen::Index>(amps.size()) != dim) {
        throw std::invalid_argument("quditvector_from_json: amplitude count does not match dim");
    }
    ComplexVector v(dim);
    for (Eigen::Index d = 0; d < dim; ++d) {
        v(d) = complex_from_json(amps.at(static_cast<std::size_t>(d)));
    }
    return QuditVector(std::move(v));
}

nlohmann::json to_json(const OpticalProgram& program) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : program.steps) {
        if (const auto* p = std::get_if<Propagate>(&step)) {
            steps.push_back({{"propagate", {{"num", p->distance.num()}, {"den", p->distance.den()}}}});
        } else {
            steps.push_back({{"phase_mask", std::get<PhaseMask>(step).phases.phases()}});
        }
    }
    return {{"dim", program.dim}, {"steps", std::move(steps)}};
}

OpticalProgram program_from_json(const nlohmann::json& j) {
    OpticalProgram program{j.at("dim").get<int>(), {}};
    for (const auto& step : j.at("steps")) {
        if (step.contains("propagate")) {
            const auto& p = step.at("propagate");
            program.steps.emplace_back(
                Propagate{Rational(p.at("num").get<std::int64_t>(), p.at("den").get<std::int64_t>())});
        } else if (step.contains("phase_mask")) {
            program.steps.emplace_back(PhaseMask{PhaseVector(step.at("phase_mask").get<std::vector<double>>())});
        } else {
            throw std::invalid_argument("program_from_json: step is neither propagate nor phase_mask");
        }
    }
    return program;
}

}  // namespace talbot::qudit
