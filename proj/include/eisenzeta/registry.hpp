#pragma once

#include <map>
#include <string>
#include <vector>

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

// Overrides for a verify target; unknown keys are ignored by targets that
// do not consume them. Values are parsed like CLI flags ("re,im" or
// "mod@argdeg" for complex).
using VerifyParams = std::map<std::string, std::string>;

struct VerifyRow {
    std::string params;
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    double residual = 0.0;  // the scaled residual the threshold applies to
    double threshold = 0.0;
    bool passed = false;
    std::string note;
    double wall_time = 0.0;
};

struct VerifyReport {
    std::string target;
    std::string description;
    double threshold = 0.0;
    bool passed = false;
    double max_residual = 0.0;
    std::vector<VerifyRow> rows;
};

// Registered identity targets (acceptance criteria defaults).
std::vector<std::string> verify_targets();
bool is_verify_target(const std::string& target);
const char* verify_description(const std::string& target);

// Runs a target at its default (acceptance) grid, or at the overridden
// point when params pin specific values. Unknown target -> std::domain_error.
VerifyReport run_verify(const std::string& target, const VerifyParams& params,
                        const Truncation& t, int workers);

// Complex parsing shared with the CLI: "re,im", "re", or "mod@argdeg".
cplx parse_complex(const std::string& text);

} // namespace eisenzeta
