#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncx {

struct SelftestOptions {
    std::uint64_t seed = 42;
    std::size_t cases = 200;
};

struct CriterionResult {
    std::string id;      // "1" .. "13", with 10 split into "10a" and "10b"
    std::string title;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string detail;
    double seconds = 0;
    bool passed() const { return failures == 0 && cases > 0; }
};

std::vector<std::string> criterion_ids();
/// Throws InvalidParameters for an unknown id.
CriterionResult run_criterion(const std::string& id, const SelftestOptions& options);
std::vector<CriterionResult> run_all_criteria(const SelftestOptions& options);

/// "PASS  3  title  (cases, checks, failures, seconds)  detail".
std::string format_result(const CriterionResult& r);

}  // namespace ncx
