#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codekit/bounds.hpp"
#include "codekit/locality.hpp"

namespace codekit {

// Everything the verify pipeline establishes about one tower's code.
// failures lists the claims that did not hold (empty = pass); flags carries
// non-failing notes such as the empirical-locality fallback.
struct VerificationReport {
    unsigned p = 0, s = 0, m = 0, m1 = 0, m2 = 0, e = 0, l = 0;
    std::uint64_t q = 0;
    std::string case_tag;
    std::uint64_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t d = 0;
    std::string weight_enumerator;
    std::optional<bool> predicted_match;
    bool self_orthogonal = false;
    std::uint64_t divisor = 0;
    std::uint64_t dual_min_distance = 0;
    std::vector<std::string> dual_low_weights;  // A'_1.. as exact decimal strings
    BoundReport bounds{};
    std::uint64_t locality = 0;
    std::optional<std::vector<RepairRule>> repair_rules;
    std::uint64_t runtime_ms = 0;

    std::vector<std::string> failures;
    std::vector<std::string> flags;

    bool passed() const { return failures.empty(); }
};

// JSON with lexicographically ordered keys; byte-identical for identical
// inputs except the runtime_ms line
std::string report_json(const VerificationReport& r);

// human-oriented rendering, includes failures and flags
std::string report_text(const VerificationReport& r);

}  // namespace codekit
