#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "codekit/field_tower.hpp"

namespace codekit {

// A [n, k] code over GF(q) given by generator rows in subfield labels
// (0 = zero, 1 + j = beta^j). Carries its own label tables so instances
// stay valid independently of the tower they were built from.
class LinearCode {
  public:
    LinearCode(std::uint32_t q, std::vector<std::uint16_t> add_table,
               std::vector<std::uint16_t> mul_table, std::vector<std::vector<std::uint16_t>> rows);

    std::uint32_t q() const { return q_; }
    std::uint64_t n() const { return n_; }
    std::uint32_t k() const { return k_; }

    const std::vector<std::uint16_t>& row(std::uint32_t i) const { return rows_.at(i); }
    std::vector<std::uint16_t> column(std::uint64_t i) const;

    std::uint16_t label_add(std::uint16_t a, std::uint16_t b) const { return add_[a * q_ + b]; }
    std::uint16_t label_mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * q_ + b]; }
    std::uint16_t label_neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t label_inv(std::uint16_t a) const;

    std::uint32_t rank() const;

    // message count q^k; throws if it does not fit the enumeration counter
    std::uint64_t message_space() const;

    // A_0..A_n by enumerating all q^k messages (parallel, deterministic).
    // With dependent rows each codeword is counted once per preimage.
    std::vector<std::uint64_t> weight_distribution_brute() const;

    bool is_self_orthogonal() const;

    // gcd of the weights carrying nonzero frequency (w >= 1); 0 if none
    static std::uint64_t weight_divisor(const std::vector<std::uint64_t>& dist);

    // "1+100z^12+120z^15+20z^18+2z^21": ascending weights, zero terms
    // dropped, unit coefficients elided except for the constant term
    static std::string enumerator_string(const std::vector<std::uint64_t>& dist);

    // first w >= 1 with dist[w] > 0; 0 when the code has no nonzero word
    static std::uint64_t min_distance(const std::vector<std::uint64_t>& dist);

    // exact dual distribution A'_0..A'_n via the MacWilliams transform
    std::vector<boost::multiprecision::cpp_int> macwilliams_dual(
        const std::vector<std::uint64_t>& dist) const;

    // A'_1..A'_4 solved from the first five power moments of the primal
    // distribution, exact; independent route from macwilliams_dual
    std::vector<boost::multiprecision::cpp_int> pless_low_dual_weights(
        const std::vector<std::uint64_t>& dist) const;

  private:
    std::uint32_t q_, k_;
    std::uint64_t n_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
    std::vector<std::vector<std::uint16_t>> rows_;
};

// dual minimum distance with the same convention as min_distance: 0 when
// the dual is trivial
std::uint64_t dual_min_distance(const std::vector<boost::multiprecision::cpp_int>& dual_dist);

// evaluation points: x in GF(q^m)^* with Tr_{q^m2 -> q}(N_{q^m -> q^m2}(x)) = 0
// in increasing discrete-log order, then the zero element last
std::vector<FieldElement> defining_set(const FieldTower& t);

// the k = m1 + 1 generator: an all-ones row on top of the m1 trace rows
// t -> (Tr_{q^m1 -> q}(alpha1^(t-1) N_{q^m -> q^m1}(x)))_x over the defining
// set; throws if the rows do not reach full rank
LinearCode build_augmented_code(const FieldTower& t);

}  // namespace codekit
