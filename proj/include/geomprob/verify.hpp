// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geomprob {

struct Check {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool overall_pass = true;

    void add(std::string name, double expected, double actual, double tolerance);
    void merge(const VerificationReport& other);
};

struct VerifyOptions {
    std::uint64_t trials = 1'000'000;    // Monte Carlo suite sample size
    std::uint64_t seed = 0;
    unsigned workers = 0;                // 0 = all hardware threads
    std::optional<double> tol_override;  // replaces every check's tolerance
};

VerificationReport verify_predicates(const VerifyOptions& opts);
VerificationReport verify_dilog(const VerifyOptions& opts);
VerificationReport verify_quadrature(const VerifyOptions& opts);
VerificationReport verify_montecarlo(const VerifyOptions& opts);

// suite is one of: all, predicates, dilog, quadrature, montecarlo.
// Throws std::invalid_argument for anything else.
VerificationReport verify_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace geomprob
