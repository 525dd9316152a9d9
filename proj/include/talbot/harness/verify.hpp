#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace talbot::harness {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

class UnknownSuiteError : public std::invalid_argument {
public:
    explicit UnknownSuiteError(const std::string& name);
};

/// Suites: algebra, qft, crosscheck, czgate.
const std::vector<std::string>& suite_names();
VerifyReport run_suite(const std::string& name);

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace talbot::harness
