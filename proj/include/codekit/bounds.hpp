#pragma once

#include <cstdint>
#include <string>

namespace codekit {

// Sum of ceil(d / q^i) for i < k, the least length a [*, k, d] code over
// GF(q) can have.
std::uint64_t griesmer_min_length(std::uint64_t k, std::uint64_t d, std::uint64_t q);

// Largest k with griesmer_min_length(k, d, q) <= n; 0 if even k = 1 fails.
std::uint64_t griesmer_k_upper(std::uint64_t n, std::uint64_t d, std::uint64_t q);

// True iff [n, k, d+1] parameters violate the Hamming bound, so no code
// with the larger distance exists. Exact big-integer arithmetic.
bool sphere_packing_distance_optimal(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                                     std::uint64_t q);

// min over 1 <= t <= n/(r+1) of t r + k_upper(n - t(r+1), d); a term where
// the residual length drops below d contributes t r alone.
std::uint64_t cm_locality_bound(std::uint64_t n, std::uint64_t d, std::uint64_t q, std::uint64_t r);

struct BoundReport {
    std::uint64_t griesmer_min_length;
    bool griesmer_optimal;  // n admits [n,k,d] but no [n,k,d+1] by Griesmer
    bool sphere_packing_distance_optimal;
    std::uint64_t cm_upper;
    std::string cm_verdict;  // "optimal", "almost-optimal", or "neither"
};

BoundReport compute_bound_report(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q,
                                 std::uint64_t r);

}  // namespace codekit
