#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "codekit/field_tower.hpp"
#include "codekit/report.hpp"

namespace codekit {

// Which closed-form weight table applies, keyed on (e, l) and the excluded
// (m1, m2) = (2, 2) pair.
enum class FamilyCase { Thm41, Thm42, Thm43, Unsupported };

const char* family_case_name(FamilyCase c);

FamilyCase classify_case(const FieldTower& t);

struct PredictedDistribution {
    FamilyCase family_case;
    // weight -> frequency, ascending, rows with equal weights merged
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

    std::uint64_t total() const;
};

// Exact table evaluation for a supported case; throws for Unsupported and
// for the degenerate m2 = 1 towers whose table rows collapse onto weight 0.
PredictedDistribution predicted_distribution(const FieldTower& t);

// Closed-form dual low-weight counts for the m = m1, m2 = 2 shape:
// {A'_1, A'_2, A'_3} for q > 2, {A'_1, A'_2, A'_3, A'_4} for q = 2 (m > 4).
std::vector<boost::multiprecision::cpp_int> predicted_dual_low_weights(std::uint64_t q,
                                                                       unsigned m);

// Build the code, brute-force the distribution, compare against the
// prediction where one exists, and check the case's self-orthogonality,
// divisibility, dual-distance, and locality claims. Mismatches land in
// report.failures; construction or budget problems throw.
VerificationReport verify_family(const FieldTower& t, unsigned max_enum_bits = 24);

}  // namespace codekit
