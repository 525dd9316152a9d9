#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace talbot::harness {

/// Every parameter a subcommand reads. A run is reproduced from this record alone.
struct RunConfig {
    std::string command;

    int dim = 2;
    std::int64_t q = 1;
    int k = 0;

    std::optional<double> slit_ratio;  // default depends on the command
    double wavelength = 0.01;
    int max_order = 256;

    double z_start = 0.0;
    double z_end = 1.0;
    std::size_t z_steps = 257;
    std::size_t x_steps = 256;
    std::string program;       // "" (free propagation) or "hadamard"
    std::string program_file;  // JSON program, overrides `program`

    std::string suite;

    std::vector<double> n_slits{5.0, 20.0, 100.0};
    std::vector<std::int64_t> m_list{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    bool periodic_control = true;
    double extent_in_sigmas = 16.0;

    double theta = 0.0;
    double phi = 0.0;
    std::uint64_t shots = 0;

    std::string out;
    std::uint64_t seed = 0;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

}  // namespace talbot::harness
