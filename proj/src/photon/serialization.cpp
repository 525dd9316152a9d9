#include "talbot/photon/serialization.hpp"

#include "talbot/qudit/serialization.hpp"

namespace talbot::photon {

nlohmann::json to_json(const PostSelectedOperator& op) {
    nlohmann::json j = qudit::matrix_to_json(op.g);
    j["qudit_dim"] = op.dim;
    j["k"] = op.k;
    j["success_prob"] = op.success_prob;
    j["local_corrections"] = {
        {"reference", op.corrections.reference},
        {"global_phase", op.corrections.global_phase},
        {"alpha", op.corrections.alpha},
        {"beta", op.corrections.beta},
    };
    j["path_swap_applied"] = op.path_swap_applied;
    j["swapped_states"] = op.swapped_states;
    j["corrected"] = qudit::matrix_to_json(op.corrected)["entries"];
    return j;
}

}  // namespace talbot::photon
