#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace adsfam {

struct Report {
    std::string check;
    std::map<std::string, std::string> params;
    std::string status;  // "pass" | "fail" | "error"
    nlohmann::json details = nlohmann::json::array();
    long timing_ms = 0;

    nlohmann::json to_json(bool with_timing) const;
};

// Names accepted by the verify command.
const std::vector<std::string>& suite_names();

bool suite_uses_degree(const std::string& suite);

// Runs one suite cell. `degree` is the operator order for
// equivariance/uniqueness/parity/residue, the half-order for special-values,
// and the degree bound for centralizer; ignored by brackets/geometry/lemmas.
Report run_suite(const std::string& suite, int n, int degree);

// Stable ordering for aggregate reports: (check, n, N).
bool report_less(const Report& a, const Report& b);

}  // namespace adsfam
