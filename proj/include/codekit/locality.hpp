#pragma once

#include <cstdint>
#include <vector>

#include "codekit/field_tower.hpp"
#include "codekit/linear_code.hpp"

namespace codekit {

// g_target = coef1 * g_helper1 + coef2 * g_helper2 column-wise over GF(q),
// coefficients as subfield labels. The identity is checked on construction
// of every rule this module returns.
struct RepairRule {
    std::uint64_t target;
    std::uint64_t helper1;
    std::uint64_t helper2;
    std::uint16_t coef1;
    std::uint16_t coef2;
};

// True iff the explicit repair-group construction applies: q > 2 and some
// t with 0 < t < q-1 and gcd(m/m1, q-1) | t exists.
bool repair_feasible(const FieldTower& t);

// The deterministic two-helper repair of column i of the augmented code
// over the defining set D (zero element last). Nonzero columns use the
// scaled point l d_i in D together with the zero column; the zero column
// itself is repaired by inverting the rule for the first column.
RepairRule repair_pair(const FieldTower& t, const std::vector<FieldElement>& D, std::uint64_t i);

// repair_pair for every column, identities all verified
std::vector<RepairRule> repair_all(const FieldTower& t, const std::vector<FieldElement>& D);

// Smallest r <= r_max such that every generator column is a GF(q)-linear
// combination of at most r other columns; r_max + 1 if some column needs
// more. Exhaustive and deterministic.
std::uint64_t locality_search(const LinearCode& code, std::uint64_t r_max = 2);

}  // namespace codekit
