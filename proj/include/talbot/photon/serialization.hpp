#pragma once

#include <json.hpp>

#include "talbot/photon/cz_gate.hpp"

namespace talbot::photon {

/// Matrix schema of the qudit layer plus qudit_dim, k, success_prob,
/// local_corrections, path_swap_applied and swapped_states.
nlohmann::json to_json(const PostSelectedOperator& op);

}  // namespace talbot::photon
