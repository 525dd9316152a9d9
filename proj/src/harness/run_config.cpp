#include "talbot/harness/run_config.hpp"

namespace talbot::harness {

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j = {
        {"command", c.command},
        {"dim", c.dim},
        {"q", c.q},
        {"k", c.k},
        {"wavelength", c.wavelength},
        {"max_order", c.max_order},
        {"z_start", c.z_start},
        {"z_end", c.z_end},
        {"z_steps", c.z_steps},
        {"x_steps", c.x_steps},
        {"program", c.program},
        {"program_file", c.program_file},
        {"suite", c.suite},
        {"n_slits", c.n_slits},
        {"m_list", c.m_list},
        {"periodic_control", c.periodic_control},
        {"extent_in_sigmas", c.extent_in_sigmas},
        {"theta", c.theta},
        {"phi", c.phi},
        {"shots", c.shots},
        {"out", c.out},
        {"seed", c.seed},
    };
    j["slit_ratio"] = c.slit_ratio ? nlohmann::json(*c.slit_ratio) : nlohmann::json(nullptr);
    return j;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    RunConfig c;
    auto read = [&j](const char* key, auto& field) {
        if (j.contains(key)) {
            j.at(key).get_to(field);
        }
    };
    read("command", c.command);
    read("dim", c.dim);
    read("q", c.q);
    read("k", c.k);
    if (j.contains("slit_ratio") && !j.at("slit_ratio").is_null()) {
        c.slit_ratio = j.at("slit_ratio").get<double>();
    }
    read("wavelength", c.wavelength);
    read("max_order", c.max_order);
    read("z_start", c.z_start);
    read("z_end", c.z_end);
    read("z_steps", c.z_steps);
    read("x_steps", c.x_steps);
    read("program", c.program);
    read("program_file", c.program_file);
    read("suite", c.suite);
    read("n_slits", c.n_slits);
    read("m_list", c.m_list);
    read("periodic_control", c.periodic_control);
    read("extent_in_sigmas", c.extent_in_sigmas);
    read("theta", c.theta);
    read("phi", c.phi);
    read("shots", c.shots);
    read("out", c.out);
    read("seed", c.seed);
    return c;
}

}  // namespace talbot::harness
