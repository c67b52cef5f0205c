#pragma once

// Named property suites with deterministic, seed-driven random cases.

#include <cstdint>
#include <string>
#include <vector>

#include "quatla/json_io.hpp"

namespace quatla::verify {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    int cases = 0;
    bool pass = true;
};

struct SuiteReport {
    std::string suite;
    int cases = 0;
    double max_residual = 0.0;
    bool pass = true;
    std::vector<CheckResult> checks;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Cases per check; 0 keeps each check's default count.
    int cases = 0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

json_io::json to_json(const SuiteReport& r);

/// |a - b| / max(|a|, |b|), 0 when both vanish.
double rel_error(double a, double b);

/// 2 pi^2 * integral_0^R lhs(r) r^3 dr at n = 1, eps = 1, using
/// fundamental_check along a ray. Returns {integral, tail bound}.
struct IntegralResult {
    double value;
    double tail_bound;
};
IntegralResult fundamental_integral(double cutoff = 1e3);

} // namespace quatla::verify
