#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "talbot/harness/commands.hpp"
#include "talbot/harness/run_config.hpp"

namespace {

using talbot::harness::RunConfig;

void add_grating_flags(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--slit-ratio", c.slit_ratio, "slit width a/l");
    cmd->add_option("--wavelength", c.wavelength, "wavelength lambda/l");
    cmd->add_option("--max-order", c.max_order, "Fourier truncation M");
}

void add_carpet_resolution(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--z-steps", c.z_steps, "rows in z")->check(CLI::PositiveNumber);
    cmd->add_option("--x-steps", c.x_steps, "columns in x")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Talbot quDit simulator"};
    app.require_subcommand(1);

    RunConfig c;
    std::string save_config;
    std::string config_file;
    app.add_option("--save-config", save_config, "write the resolved run configuration as JSON");

    auto* carpet = app.add_subcommand("carpet", "render a Talbot carpet (PGM + CSV)");
    add_grating_flags(carpet, c);
    add_carpet_resolution(carpet, c);
    carpet->add_option("--z-start", c.z_start, "first plane, units of 2 z_T");
    carpet->add_option("--z-end", c.z_end, "last plane, units of 2 z_T");
    carpet->add_option("--program", c.program, "built-in program (hadamard)");
    carpet->add_option("--program-file", c.program_file, "program JSON");
    carpet->add_option("--out", c.out, "output prefix")->required();

    auto* gate = app.add_subcommand("gate", "Talbot unitary as JSON");
    gate->add_option("--dim", c.dim, "dimension D")->required();
    gate->add_option("--q", c.q, "number of canonical steps");
    gate->add_option("--out", c.out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", c.suite, "algebra | qft | crosscheck | czgate")->required();
    verify->add_option("--out", c.out, "JSON report file");

    auto* fidelity = app.add_subcommand("fidelity", "finite-aperture revival fidelity sweep (CSV)");
    fidelity->add_option("--n-slits", c.n_slits, "illuminated slits, sigma/l")->delimiter(',');
    fidelity->add_option("--sigma", c.n_slits, "alias of --n-slits")->delimiter(',');
    fidelity->add_option("--m", c.m_list, "revival orders")->delimiter(',');
    fidelity->add_option("--wavelength", c.wavelength, "wavelength lambda/l");
    fidelity->add_option("--slit-ratio", c.slit_ratio, "slit width a/l");
    fidelity->add_option("--extent-sigmas", c.extent_in_sigmas, "grid extent in units of sigma");
    fidelity->add_flag("!--no-control", c.periodic_control, "omit the periodic control rows");
    fidelity->add_option("--out", c.out, "output CSV (default stdout)");

    auto* prepare = app.add_subcommand("prepare", "Bloch-state preparation program, state and carpet");
    prepare->add_option("--theta", c.theta, "polar angle");
    prepare->add_option("--phi", c.phi, "relative phase");
    prepare->add_option("--shots", c.shots, "detection events to sample");
    prepare->add_option("--seed", c.seed, "sampling seed");
    add_grating_flags(prepare, c);
    add_carpet_resolution(prepare, c);
    prepare->add_option("--out", c.out, "output prefix")->required();

    auto* cz = app.add_subcommand("czgate", "post-selected two-photon controlled-phase gate as JSON");
    cz->add_option("--dim", c.dim, "dimension D")->required();
    cz->add_option("--k", c.k, "controlled state k");
    cz->add_option("--out", c.out, "output file (default stdout)");

    auto* run = app.add_subcommand("run", "replay a saved configuration");
    run->add_option("--config", config_file, "RunConfig JSON")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : talbot::harness::kExitUsage;
    }

    if (run->parsed()) {
        std::ifstream f(config_file);
        try {
            c = talbot::harness::run_config_from_json(nlohmann::json::parse(f));
        } catch (const std::exception& e) {
            std::cerr << "error: bad config " << config_file << ": " << e.what() << "\n";
            return talbot::harness::kExitUsage;
        }
    } else {
        c.command = app.get_subcommands().front()->get_name();
    }

    if (!save_config.empty()) {
        std::ofstream f(save_config);
        if (!(f << talbot::harness::to_json(c).dump(2) << "\n")) {
            std::cerr << "error: cannot write " << save_config << "\n";
            return talbot::harness::kExitUsage;
        }
    }
    return talbot::harness::run_command(c, std::cout, std::cerr);
}
