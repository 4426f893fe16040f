#pragma once

#include <cstdint>
#include <vector>

namespace codekit {

// Element of the top field GF(q^m) = GF(p^(s*m)).
// Index encoding: 0 is the zero element, index i > 0 is alpha^(i-1) for the
// canonical generator alpha of the multiplicative group.
struct FieldElement {
    std::uint32_t v = 0;

    friend bool operator==(FieldElement a, FieldElement b) { return a.v == b.v; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.v != b.v; }
    friend bool operator<(FieldElement a, FieldElement b) { return a.v < b.v; }
};

// Field tower GF(p) < GF(q) < GF(q^m1), GF(q^m2) < GF(q^m) with q = p^s.
//
// Construction is fully deterministic:
//  - the modulus is the first monic irreducible polynomial of degree s*m
//    over GF(p) in counter order (coefficient of x^i = digit i of the
//    counter written in base p),
//  - alpha is the first polynomial-basis element (in the same counter
//    order) of multiplicative order p^(s*m) - 1.
//
// Arithmetic runs on discrete log / antilog tables. Fields with at most
// 2^12 elements get a full addition table; larger fields use Zech
// logarithms.
class FieldTower {
  public:
    FieldTower(std::uint64_t p, unsigned s, unsigned m, unsigned m1, unsigned m2,
               unsigned max_field_bits = 20);

    std::uint64_t p() const { return p_; }
    unsigned s() const { return s_; }
    unsigned m() const { return m_; }
    unsigned m1() const { return m1_; }
    unsigned m2() const { return m2_; }
    std::uint64_t q() const { return q_; }
    unsigned e() const { return e_; }
    unsigned l() const { return l_; }

    // number of elements of GF(q^m) and order of its multiplicative group
    std::uint64_t order() const { return order_; }
    std::uint64_t group_order() const { return N_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement alpha() const { return from_dlog(1 % N_); }
    // canonical generators of the subfields' multiplicative groups
    FieldElement beta() const { return beta_; }
    FieldElement alpha1() const { return alpha1_; }
    FieldElement alpha2() const { return alpha2_; }

    FieldElement from_dlog(std::uint64_t j) const { return {static_cast<std::uint32_t>(j % N_ + 1)}; }
    std::uint64_t dlog(FieldElement x) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, long long e) const;
    // x^(p^t)
    FieldElement frobenius(FieldElement x, unsigned t) const;

    // GF(q^a) membership, a | m
    bool in_subfield(FieldElement x, unsigned a) const;

    // Tr_{q^a/q^b}(x) for x in GF(q^a), b | a, a | m
    FieldElement rel_trace(FieldElement x, unsigned a, unsigned b) const;
    // N_{q^a/q^b}(x) = x^((q^a-1)/(q^b-1)), with 0 mapped to 0
    FieldElement rel_norm(FieldElement x, unsigned a, unsigned b) const;
    // absolute trace GF(q^a) -> GF(p) as an integer in [0, p)
    std::uint64_t trace_to_prime(FieldElement x, unsigned a) const;

    // GF(q) labels: 0 for zero, 1 + j for beta^j, 0 <= j <= q-2
    std::uint32_t subfield_label(FieldElement x) const;
    FieldElement label_element(std::uint32_t label) const;
    std::uint32_t label_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t label_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t label_neg(std::uint32_t a) const;
    std::uint32_t label_inv(std::uint32_t a) const;
    const std::vector<std::uint32_t>& label_add_table() const { return lab_add_; }
    const std::vector<std::uint32_t>& label_mul_table() const { return lab_mul_; }

    // value of a prime-subfield element as an integer in [0, p)
    std::uint64_t prime_value(FieldElement x) const;

    // modulus coefficients c_0..c_D (monic, c_D = 1) and the polynomial-basis
    // counter of alpha, exposed so reproducibility can be asserted
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::uint64_t generator_counter() const { return gen_counter_; }

    // polynomial-basis counter of an element (digit i in base p = coefficient
    // of x^i) and its inverse, for independent cross-checks
    std::uint64_t element_counter(FieldElement x) const;
    FieldElement from_counter(std::uint64_t c) const;

  private:
    std::uint64_t p_;
    unsigned s_, m_, m1_, m2_, e_, l_;
    std::uint64_t q_, order_, N_;
    unsigned degree_;

    std::vector<std::uint32_t> modulus_;
    std::uint64_t gen_counter_ = 0;

    std::vector<std::uint32_t> alog_;  // alog_[j] = polynomial counter of alpha^j
    std::vector<std::uint32_t> dlog_;  // inverse of alog_, dlog_[0] unused
    std::vector<std::uint16_t> add_tbl_;  // full table, element indexes, small fields
    std::vector<std::uint32_t> zech_;     // zech_[k] = dlog(1 + alpha^k), N_ if zero
    FieldElement neg_one_;
    FieldElement beta_, alpha1_, alpha2_;
    std::vector<std::uint32_t> lab_add_, lab_mul_;  // q*q label tables

    FieldElement add_poly(FieldElement a, FieldElement b) const;
    std::uint64_t subfield_step(unsigned a) const;  // N / (q^a - 1)
};

}  // namespace codekit
