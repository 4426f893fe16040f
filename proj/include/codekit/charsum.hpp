#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "codekit/cyclotomic.hpp"
#include "codekit/field_tower.hpp"

namespace codekit {

// value -> multiplicity, sorted by value
struct ExpSumDistribution {
    std::vector<std::pair<std::int64_t, std::uint64_t>> entries;

    std::uint64_t total() const;
    friend bool operator==(const ExpSumDistribution&, const ExpSumDistribution&) = default;
};

// Precomputed character tables for one tower. chi1/chi2 are the canonical
// additive characters of GF(q^m1)/GF(q^m2), chi the one of GF(q); all are
// evaluated through absolute traces into GF(p).
class CharSumContext {
  public:
    explicit CharSumContext(const FieldTower& t);

    const FieldTower& tower() const { return t_; }

    // Delta(b) = sum over x in GF(q^m)^*, y,z in GF(q)^* of
    //            chi1(y b N1(x)) chi2(z N2(x)), b in GF(q^m1)^*
    std::int64_t delta(FieldElement b) const;
    // Omega(b,c) adds the factor chi(y c), c in GF(q)^*
    std::int64_t omega(FieldElement b, FieldElement c) const;

    // multisets over all b (resp. all (b,c)) by exhaustive summation
    ExpSumDistribution delta_distribution_brute() const;
    ExpSumDistribution omega_distribution_brute() const;

    // number of elementary character terms one full brute-force
    // delta+omega sweep costs, for budget decisions
    std::uint64_t sweep_term_count() const;

  private:
    const FieldTower& t_;
    std::uint64_t T1_, T2_, Tq_, u1_, u2_;
    std::vector<std::uint8_t> tr1_, tr2_, trq_;  // absolute traces of alpha_i^j

    std::int64_t delta_by_dlog(std::uint64_t jb) const;
    std::int64_t omega_by_dlog(std::uint64_t jb, std::uint64_t jc) const;
};

// closed-form value distributions; delta needs e in {1,2}, omega needs
// (e,l) in {(1,1),(2,1),(1,2)}
ExpSumDistribution delta_closed_distribution(const FieldTower& t);
ExpSumDistribution omega_closed_distribution(const FieldTower& t);

// exact orthogonality check over GF(q^a): every nontrivial additive and
// multiplicative character sums to zero, the trivial ones to q^a resp.
// q^a - 1
bool char_orthogonality_check(const FieldTower& t, unsigned a);

// numeric Gauss sum over GF(q^a) for the multiplicative character psi_j
// (psi_j(g) = exp(2 pi i j / (q^a-1)) on the canonical generator g) paired
// with the canonical additive character
std::complex<double> gauss_sum_numeric(const FieldTower& t, unsigned a, std::uint64_t j);

// closed-form semiprimitive Gauss sum: N > 2, gamma >= 1, and some j with
// p^j = -1 (mod N); the character is the s_exp-th power of one of exact
// order N over GF(r), r = p^(2 j gamma)
struct SemiprimitiveGauss {
    std::uint64_t r;
    unsigned j;
    double value;  // always real
};
SemiprimitiveGauss gauss_sum_closed_semiprimitive(std::uint64_t p, std::uint64_t N, unsigned gamma,
                                                  std::uint64_t s_exp = 1);

// closed-form quadratic-character Gauss sum over GF(p^s), p odd; purely
// imaginary when p = 3 (mod 4) and s is odd
std::complex<double> gauss_sum_closed_quadratic(std::uint64_t p, unsigned s);

}  // namespace codekit
