#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace l1m::verify {

inline constexpr const char* kEngineVersion = "l1m 1.0.0";

struct CheckResult {
    std::string id;     // stable machine id, e.g. "criterion-08a-triple-point"
    std::string name;   // human description
    bool pass = false;
    std::string detail; // failure diagnostics or a one-line summary
};

// Named suites: goncharova, bsa, verma, thread, resolution, massey, ffr,
// properties, all. Unknown names throw std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite);

// The twelve acceptance criteria as lazy thunks, in order, so callers can
// time each one.
std::vector<std::pair<std::string, std::function<CheckResult()>>> acceptance_checks();

// Convenience: run all twelve.
std::vector<CheckResult> run_acceptance();

} // namespace l1m::verify
