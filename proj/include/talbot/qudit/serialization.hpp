#pragma once

#include <json.hpp>

#include "talbot/qudit/program.hpp"
#include "talbot/qudit/types.hpp"

namespace talbot::qudit {

/// {"dim": D, "entries": [[{"re": …, "im": …}, …], …]}
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuditMatrix& m);
QuditMatrix quditmatrix_from_json(const nlohmann::json& j);

/// {"dim": D, "amplitudes": [{"re": …, "im": …}, …]}
nlohmann::json to_json(const QuditVector& v);
QuditVector quditvector_from_json(const nlohmann::json& j);

/// {"dim": D, "steps": [{"propagate": {"num": q, "den": r}} | {"phase_mask": [φ_0, …]}]}
nlohmann::json to_json(const OpticalProgram& program);
OpticalProgram program_from_json(const nlohmann::json& j);

}  // namespace talbot::qudit
