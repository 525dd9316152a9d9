#include "talbot/harness/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "talbot/core/numeric_format.hpp"
#include "talbot/harness/verify.hpp"
#include "talbot/photon/serialization.hpp"
#include "talbot/qudit/gates.hpp"
#include "talbot/qudit/measurement.hpp"
#include "talbot/qudit/qft.hpp"
#include "talbot/qudit/serialization.hpp"
#include "talbot/wave/carpet.hpp"
#include "talbot/wave/fidelity.hpp"
#include "talbot/wave/image_io.hpp"

namespace talbot::harness {

namespace {

void emit(const RunConfig& config, const std::string& suffix, const std::string& bytes, std::ostream& out) {
    if (config.out.empty()) {
        out << bytes;
    } else {
        wave::write_file(config.out + suffix, bytes);
    }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

qudit::OpticalProgram load_program(const RunConfig& config) {
    if (!config.program_file.empty()) {
        std::ifstream f(config.program_file);
        if (!f) {
            throw std::runtime_error("cannot read program file " + config.program_file);
        }
        return qudit::program_from_json(nlohmann::json::parse(f));
    }
    if (config.program == "hadamard") {
        return qudit::hadamard_program();
    }
    throw std::invalid_argument("unknown program '" + config.program + "' (expected hadamard or --program-file)");
}

void print_revivals(const wave::CarpetImage& image, std::ostream& out) {
    const auto revivals = wave::detect_revivals(image);
    if (revivals.empty()) {
        out << "revivals: none\n";
    }
    for (const auto& r : revivals) {
        out << (r.half_shifted ? "revival (shifted by l/2)" : "revival") << " at z=" << format_double(r.z)
            << " similarity=" << format_double(r.similarity) << "\n";
    }
}

std::string probabilities_line(const std::vector<double>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i == 0 ? "" : " ") + format_double(p[i]);
    }
    return s;
}

}  // namespace

int cmd_carpet(const RunConfig& config, std::ostream& out) {
    if (config.out.empty()) {
        throw std::invalid_argument("carpet needs --out <prefix>");
    }
    wave::GratingSpec spec;
    spec.wavelength = config.wavelength;
    spec.max_order = config.max_order;
    wave::CarpetImage image;
    if (config.program.empty() && config.program_file.empty()) {
        spec.slit_ratio = config.slit_ratio.value_or(0.5);
        image = wave::render_carpet(spec, config.z_start, config.z_end, config.z_steps, config.x_steps);
    } else {
        const auto program = load_program(config);
        spec.slit_ratio = config.slit_ratio.value_or(1.0 / (2.0 * program.dim));
        auto result = wave::render_program_carpet(spec, program, config.z_steps, config.x_steps);
        const auto projection = wave::project_onto_basis(result.final_field, program.dim, spec.slit_ratio);
        out << "final-plane populations: "
            << probabilities_line(qudit::measure_probabilities(projection.amplitudes.normalized())) << "\n";
        image = std::move(result.image);
    }
    wave::write_file(config.out + ".pgm", wave::encode_pgm(image));
    wave::write_file(config.out + ".csv", wave::encode_carpet_csv(image));
    print_revivals(image, out);
    return kExitSuccess;
}

int cmd_gate(const RunConfig& config, std::ostream& out) {
    emit(config, "", dump(qudit::to_json(qudit::talbot_unitary(config.dim, config.q))), out);
    return kExitSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const VerifyReport report = run_suite(config.suite);
    out << to_text(report);
    if (!config.out.empty()) {
        wave::write_file(config.out, dump(to_json(report)));
    }
    return report.passed() ? kExitSuccess : kExitVerificationFailure;
}

int cmd_fidelity(const RunConfig& config, std::ostream& out) {
    wave::FidelityOptions options;
    options.extent_in_sigmas = config.extent_in_sigmas;
    std::vector<wave::FidelitySweep> sweeps;
    for (const double n : config.n_slits) {
        wave::GratingSpec spec = wave::fidelity_default_spec(n);
        spec.wavelength = config.wavelength;
        spec.max_order = static_cast<int>(std::floor(0.1 / spec.wavelength + 1e-9));
        if (config.slit_ratio) {
            spec.slit_ratio = *config.slit_ratio;
        }
        sweeps.push_back(wave::fidelity_sweep(spec, config.m_list, options));
    }
    if (config.periodic_control) {
        wave::GratingSpec spec = wave::fidelity_default_spec(1.0);
        spec.wavelength = config.wavelength;
        if (config.slit_ratio) {
            spec.slit_ratio = *config.slit_ratio;
        }
        sweeps.push_back(wave::periodic_fidelity(spec, config.m_list));
    }
    emit(config, "", wave::encode_fidelity_csv(sweeps), out);
    return kExitSuccess;
}

int cmd_prepare(const RunConfig& config, std::ostream& out) {
    if (config.out.empty()) {
        throw std::invalid_argument("prepare needs --out <prefix>");
    }
    const auto prep = qudit::prepare_bloch_state(config.theta, config.phi);
    wave::write_file(config.out + "_program.json", dump(qudit::to_json(prep.program)));
    wave::write_file(config.out + "_state.json", dump(qudit::to_json(prep.state)));

    wave::GratingSpec spec;
    spec.slit_ratio = config.slit_ratio.value_or(0.25);
    spec.wavelength = config.wavelength;
    spec.max_order = config.max_order;
    const auto carpet = wave::render_program_carpet(spec, prep.program, config.z_steps, config.x_steps);
    wave::write_file(config.out + ".pgm", wave::encode_pgm(carpet.image));
    wave::write_file(config.out + ".csv", wave::encode_carpet_csv(carpet.image));

    out << "total distance: " << prep.program.total_distance().to_string() << "\n";
    out << "populations: " << probabilities_line(qudit::measure_probabilities(prep.state)) << "\n";
    const auto projection = wave::project_onto_basis(carpet.final_field, 2, spec.slit_ratio);
    out << "wave populations: "
        << probabilities_line(qudit::measure_probabilities(projection.amplitudes.normalized())) << "\n";
    if (config.shots > 0) {
        const auto counts = qudit::sample(prep.state, config.shots, config.seed);
        out << "counts:";
        for (const auto c : counts) {
            out << " " << c;
        }
        out << "\n";
    }
    return kExitSuccess;
}

int cmd_czgate(const RunConfig& config, std::ostream& out) {
    emit(config, "", dump(photon::to_json(photon::build_cz(config.dim, config.k))), out);
    return kExitSuccess;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "carpet") {
            return cmd_carpet(config, out);
        }
        if (config.command == "gate") {
            return cmd_gate(config, out);
        }
        if (config.command == "verify") {
            return cmd_verify(config, out);
        }
        if (config.command == "fidelity") {
            return cmd_fidelity(config, out);
        }
        if (config.command == "prepare") {
            return cmd_prepare(config, out);
        }
        if (config.command == "czgate") {
            return cmd_czgate(config, out);
        }
        err << "error: unknown command '" << config.command << "'\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace talbot::harness
