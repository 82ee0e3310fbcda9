#pragma once

#include <string>
#include <vector>

#include "metakzb/json_io.hpp"
#include "metakzb/symring.hpp"

namespace metakzb {

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int N = 12;
    bool numeric = false;
    Complex tau;
    int q_cutoff = 64;
    double tol = 1e-9;
    // Negative control: corrupts one route so the suite must fail.
    bool inject_sign_flip = false;
};

// Symbolic identity battery (constant series, tau-series both routes,
// geometric closed forms, the simplified side A, period polynomials), plus
// numeric checks when requested.
std::vector<IdentityResult> run_verify(const VerifyOptions& opts);

bool all_pass(const std::vector<IdentityResult>& results);
Json verify_report_json(const std::vector<IdentityResult>& results);

}  // namespace metakzb
