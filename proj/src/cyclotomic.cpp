#include "codekit/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace codekit {

CyclotomicInt::CyclotomicInt(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    if (c_.size() < 2) throw std::runtime_error("CyclotomicInt: need at least 2 coefficients");
    canonicalize();
}

void CyclotomicInt::canonicalize() {
    std::int64_t lo = *std::min_element(c_.begin(), c_.end());
    if (lo != 0)
        for (auto& v : c_) v -= lo;
}

bool CyclotomicInt::is_integer() const {
    for (std::size_t j = 2; j < c_.size(); ++j)
        if (c_[j] != c_[1]) return false;
    return true;
}

std::int64_t CyclotomicInt::integer_value() const {
    if (!is_integer())
        throw std::runtime_error("CyclotomicInt::integer_value(): value is not a rational integer");
    return c_[0] - c_[1];
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (o.c_.size() != c_.size()) throw std::runtime_error("CyclotomicInt: mixed root orders");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    canonicalize();
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    if (o.c_.size() != c_.size()) throw std::runtime_error("CyclotomicInt: mixed root orders");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    canonicalize();
    return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
    if (o.c_.size() != c_.size()) throw std::runtime_error("CyclotomicInt: mixed root orders");
    const std::size_t p = c_.size();
    std::vector<std::int64_t> r(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < p; ++j)
            if (o.c_[j]) r[(i + j) % p] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    canonicalize();
    return *this;
}

bool operator==(CyclotomicInt a, CyclotomicInt b) {
    a.canonicalize();
    b.canonicalize();
    return a.c_ == b.c_;
}

CyclotomicReduction cyclotomic_reduce(std::vector<std::int64_t> coeffs) {
    CyclotomicInt z(std::move(coeffs));
    CyclotomicReduction out;
    out.canonical = z.coeffs();
    out.is_integer = z.is_integer();
    out.value = out.is_integer ? z.integer_value() : 0;
    return out;
}

}  // namespace codekit
