#pragma once

#include <cstdint>
#include <vector>

namespace codekit {

// Element of Z[zeta_p] as an integer vector (c_0, ..., c_{p-1}) standing for
// sum c_j zeta_p^j. Since 1 + zeta + ... + zeta^{p-1} = 0, a constant shift
// of all coefficients does not change the value; the canonical form keeps
// the minimum coefficient at 0. The value is a rational integer exactly
// when c_1 = c_2 = ... = c_{p-1} in canonical form, and then equals
// c_0 - c_1.
class CyclotomicInt {
  public:
    explicit CyclotomicInt(std::uint64_t p) : c_(p, 0) {}
    explicit CyclotomicInt(std::vector<std::int64_t> coeffs);

    std::uint64_t p() const { return c_.size(); }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    void add_root(std::uint64_t j, std::int64_t count = 1) { c_[j % c_.size()] += count; }
    void canonicalize();

    bool is_integer() const;
    std::int64_t integer_value() const;

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    CyclotomicInt& operator*=(const CyclotomicInt& o);
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
    friend bool operator==(CyclotomicInt a, CyclotomicInt b);

  private:
    std::vector<std::int64_t> c_;
};

// canonicalizes a raw coefficient vector in place and reports the value as a
// rational integer when it is one
struct CyclotomicReduction {
    std::vector<std::int64_t> canonical;
    bool is_integer;
    std::int64_t value;  // meaningful only when is_integer
};
CyclotomicReduction cyclotomic_reduce(std::vector<std::int64_t> coeffs);

}  // namespace codekit
