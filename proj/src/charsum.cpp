#include "codekit/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "codekit/parallel.hpp"

namespace codekit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace {

Int int_pow(Int b, unsigned e) {
    Int r = 1;
    while (e--) r *= b;
    return r;
}

std::int64_t to_i64(const Rat& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::runtime_error(std::string("charsum: non-integral ") + what);
    Int n = boost::multiprecision::numerator(r);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::runtime_error(std::string("charsum: overflow in ") + what);
    return static_cast<std::int64_t>(n);
}

std::uint64_t to_u64(const Rat& r, const char* what) {
    std::int64_t v = to_i64(r, what);
    if (v < 0) throw std::runtime_error(std::string("charsum: negative ") + what);
    return static_cast<std::uint64_t>(v);
}

ExpSumDistribution make_distribution(std::vector<std::pair<std::int64_t, std::uint64_t>> entries) {
    std::map<std::int64_t, std::uint64_t> merged;
    for (auto& [v, c] : entries) merged[v] += c;
    ExpSumDistribution out;
    out.entries.assign(merged.begin(), merged.end());
    return out;
}

}  // namespace

std::uint64_t ExpSumDistribution::total() const {
    std::uint64_t t = 0;
    for (auto& [v, c] : entries) t += c;
    return t;
}

CharSumContext::CharSumContext(const FieldTower& t) : t_(t) {
    if (t.p() > 255)
        throw std::runtime_error("CharSumContext: characteristic too large for the sum tables");
    std::uint64_t q = t.q();
    T1_ = 1;
    for (unsigned i = 0; i < t.m1(); ++i) T1_ *= q;
    --T1_;
    T2_ = 1;
    for (unsigned i = 0; i < t.m2(); ++i) T2_ *= q;
    --T2_;
    Tq_ = q - 1;
    u1_ = T1_ / Tq_;
    u2_ = T2_ / Tq_;
    tr1_.resize(T1_);
    for (std::uint64_t j = 0; j < T1_; ++j)
        tr1_[j] = static_cast<std::uint8_t>(
            t.trace_to_prime(t.pow(t.alpha1(), static_cast<long long>(j)), t.m1()));
    tr2_.resize(T2_);
    for (std::uint64_t j = 0; j < T2_; ++j)
        tr2_[j] = static_cast<std::uint8_t>(
            t.trace_to_prime(t.pow(t.alpha2(), static_cast<long long>(j)), t.m2()));
    trq_.resize(Tq_);
    for (std::uint64_t j = 0; j < Tq_; ++j)
        trq_[j] = static_cast<std::uint8_t>(
            t.trace_to_prime(t.pow(t.beta(), static_cast<long long>(j)), 1));
}

std::int64_t CharSumContext::delta_by_dlog(std::uint64_t jb) const {
    const std::uint64_t p = t_.p();
    const std::uint64_t N = t_.group_order();
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint64_t i = 0; i < N; ++i) {
        std::uint64_t a_idx = (jb + i) % T1_;
        const std::uint64_t i2 = i % T2_;
        for (std::uint64_t jy = 0; jy < Tq_; ++jy) {
            const std::uint64_t a = tr1_[a_idx];
            a_idx += u1_;
            if (a_idx >= T1_) a_idx -= T1_;
            std::uint64_t z_idx = i2;
            for (std::uint64_t jz = 0; jz < Tq_; ++jz) {
                std::uint64_t e = a + tr2_[z_idx];
                if (e >= p) e -= p;
                ++counts[e];
                z_idx += u2_;
                if (z_idx >= T2_) z_idx -= T2_;
            }
        }
    }
    auto red = cyclotomic_reduce(std::move(counts));
    if (!red.is_integer) throw std::runtime_error("CharSumContext::delta(): non-integer sum");
    return red.value;
}

std::int64_t CharSumContext::omega_by_dlog(std::uint64_t jb, std::uint64_t jc) const {
    const std::uint64_t p = t_.p();
    const std::uint64_t N = t_.group_order();
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint64_t i = 0; i < N; ++i) {
        std::uint64_t a_idx = (jb + i) % T1_;
        std::uint64_t c_idx = jc;
        const std::uint64_t i2 = i % T2_;
        for (std::uint64_t jy = 0; jy < Tq_; ++jy) {
            std::uint64_t a = tr1_[a_idx] + trq_[c_idx];
            if (a >= p) a -= p;
            a_idx += u1_;
            if (a_idx >= T1_) a_idx -= T1_;
            ++c_idx;
            if (c_idx >= Tq_) c_idx -= Tq_;
            std::uint64_t z_idx = i2;
            for (std::uint64_t jz = 0; jz < Tq_; ++jz) {
                std::uint64_t e = a + tr2_[z_idx];
                if (e >= p) e -= p;
                ++counts[e];
                z_idx += u2_;
                if (z_idx >= T2_) z_idx -= T2_;
            }
        }
    }
    auto red = cyclotomic_reduce(std::move(counts));
    if (!red.is_integer) throw std::runtime_error("CharSumContext::omega(): non-integer sum");
    return red.value;
}

std::int64_t CharSumContext::delta(FieldElement b) const {
    if (b == t_.zero()) throw std::runtime_error("CharSumContext::delta(): b must be nonzero");
    if (!t_.in_subfield(b, t_.m1()))
        throw std::runtime_error("CharSumContext::delta(): b outside GF(q^m1)");
    const std::uint64_t step = t_.group_order() / T1_;
    return delta_by_dlog(t_.dlog(b) / step);
}

std::int64_t CharSumContext::omega(FieldElement b, FieldElement c) const {
    if (b == t_.zero() || c == t_.zero())
        throw std::runtime_error("CharSumContext::omega(): b and c must be nonzero");
    if (!t_.in_subfield(b, t_.m1()))
        throw std::runtime_error("CharSumContext::omega(): b outside GF(q^m1)");
    if (!t_.in_subfield(c, 1)) throw std::runtime_error("CharSumContext::omega(): c outside GF(q)");
    const std::uint64_t step1 = t_.group_order() / T1_;
    const std::uint64_t stepq = t_.group_order() / Tq_;
    return omega_by_dlog(t_.dlog(b) / step1, t_.dlog(c) / stepq);
}

ExpSumDistribution CharSumContext::delta_distribution_brute() const {
    std::vector<std::int64_t> values(T1_);
    parallel_chunks(T1_, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (std::uint64_t jb = lo; jb < hi; ++jb) values[jb] = delta_by_dlog(jb);
    });
    std::vector<std::pair<std::int64_t, std::uint64_t>> entries;
    entries.reserve(values.size());
    for (auto v : values) entries.emplace_back(v, 1);
    return make_distribution(std::move(entries));
}

ExpSumDistribution CharSumContext::omega_distribution_brute() const {
    const std::uint64_t pairs = T1_ * Tq_;
    std::vector<std::int64_t> values(pairs);
    parallel_chunks(pairs, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (std::uint64_t idx = lo; idx < hi; ++idx)
            values[idx] = omega_by_dlog(idx / Tq_, idx % Tq_);
    });
    std::vector<std::pair<std::int64_t, std::uint64_t>> entries;
    entries.reserve(values.size());
    for (auto v : values) entries.emplace_back(v, 1);
    return make_distribution(std::move(entries));
}

std::uint64_t CharSumContext::sweep_term_count() const {
    // delta over all b plus omega over all (b, c)
    return t_.group_order() * Tq_ * Tq_ * T1_ * (1 + Tq_);
}

ExpSumDistribution delta_closed_distribution(const FieldTower& t) {
    const unsigned e = t.e();
    if (e != 1 && e != 2)
        throw std::runtime_error("delta_closed_distribution(): no closed form for e > 2");
    const Int q = t.q();
    const Int qm = int_pow(q, t.m()), qm1 = int_pow(q, t.m1()), qm2 = int_pow(q, t.m2());
    const Rat base = Rat((qm - 1) * (q - 1) * (q - 1)) / Rat((qm1 - 1) * (qm2 - 1));
    std::vector<std::pair<std::int64_t, std::uint64_t>> entries;
    if (e == 1) {
        entries.emplace_back(to_i64(base, "delta value"), to_u64(Rat(qm1 - 1), "delta count"));
    } else {
        const unsigned sigma = (t.m1() + t.m2()) / 2;
        const int sign = sigma % 2 ? -1 : 1;
        Rat v1 = base * Rat(1 + sign * int_pow(q, sigma + 1));
        Rat c1 = Rat(qm1 - 1) / Rat(q + 1);
        Rat v2 = base * Rat(1 - sign * int_pow(q, sigma));
        Rat c2 = Rat(q * (qm1 - 1)) / Rat(q + 1);
        entries.emplace_back(to_i64(v1, "delta value"), to_u64(c1, "delta count"));
        entries.emplace_back(to_i64(v2, "delta value"), to_u64(c2, "delta count"));
    }
    return make_distribution(std::move(entries));
}

ExpSumDistribution omega_closed_distribution(const FieldTower& t) {
    const unsigned e = t.e(), l = t.l();
    const bool supported = (e == 1 && l == 1) || (e == 2 && l == 1) || (e == 1 && l == 2);
    if (!supported)
        throw std::runtime_error("omega_closed_distribution(): no closed form for this (e, l)");
    const Int q = t.q();
    const Int qm = int_pow(q, t.m()), qm1 = int_pow(q, t.m1()), qm2 = int_pow(q, t.m2());
    const Rat base = Rat((qm - 1) * (q - 1)) / Rat((qm1 - 1) * (qm2 - 1));
    std::vector<std::pair<std::int64_t, std::uint64_t>> entries;
    if (e == 1 && l == 1) {
        entries.emplace_back(to_i64(-base, "omega value"),
                             to_u64(Rat((qm1 - 1) * (q - 1)), "omega count"));
    } else if (e == 2) {
        const unsigned sigma = (t.m1() + t.m2()) / 2;
        const int sign = sigma % 2 ? -1 : 1;
        Rat v1 = -base * Rat(1 + sign * int_pow(q, sigma + 1));
        Rat c1 = Rat((qm1 - 1) * (q - 1)) / Rat(q + 1);
        Rat v2 = -base * Rat(1 - sign * int_pow(q, sigma));
        Rat c2 = Rat(q) * c1;
        entries.emplace_back(to_i64(v1, "omega value"), to_u64(c1, "omega count"));
        entries.emplace_back(to_i64(v2, "omega value"), to_u64(c2, "omega count"));
    } else {
        const unsigned tau = (t.m1() + t.m2() + 1) / 2;
        Rat c = Rat((qm1 - 1) * (q - 1)) / 2;
        Rat v1 = base * Rat(-1 - int_pow(q, tau));
        Rat v2 = base * Rat(-1 + int_pow(q, tau));
        entries.emplace_back(to_i64(v1, "omega value"), to_u64(c, "omega count"));
        entries.emplace_back(to_i64(v2, "omega value"), to_u64(c, "omega count"));
    }
    return make_distribution(std::move(entries));
}

bool char_orthogonality_check(const FieldTower& t, unsigned a) {
    const std::uint64_t p = t.p();
    std::uint64_t r = 1;
    for (unsigned i = 0; i < a; ++i) r *= t.q();
    const std::uint64_t R = r - 1;
    const std::uint64_t step = t.group_order() / R;

    // additive: counts of Tr(u x) over x must be uniform for u != 0
    for (std::uint64_t ju = 0; ju <= R; ++ju) {
        FieldElement u = ju == R ? t.zero() : t.from_dlog(ju * step);
        std::vector<std::uint64_t> counts(p, 0);
        ++counts[0];  // x = 0
        for (std::uint64_t k = 0; k < R; ++k)
            ++counts[t.trace_to_prime(t.mul(u, t.from_dlog(k * step)), a)];
        if (u == t.zero()) {
            if (counts[0] != r) return false;
        } else {
            for (std::uint64_t j = 0; j < p; ++j)
                if (counts[j] != r / p) return false;
        }
    }

    // multiplicative: exponents j k mod R must cover g Z_(R/g) uniformly,
    // with a proper subgroup (so the root sum vanishes) whenever j != 0
    for (std::uint64_t j = 0; j < R; ++j) {
        std::vector<std::uint64_t> counts(R, 0);
        for (std::uint64_t k = 0; k < R; ++k) ++counts[j * k % R];
        const std::uint64_t g = std::gcd(j, R);
        if (j == 0) {
            if (counts[0] != R) return false;
            continue;
        }
        if (R / g < 2) return false;
        for (std::uint64_t v = 0; v < R; ++v) {
            if (v % g == 0) {
                if (counts[v] != g) return false;
            } else if (counts[v] != 0) {
                return false;
            }
        }
    }
    return true;
}

std::complex<double> gauss_sum_numeric(const FieldTower& t, unsigned a, std::uint64_t j) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < a; ++i) r *= t.q();
    const std::uint64_t R = r - 1;
    const std::uint64_t step = t.group_order() / R;
    const double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> sum = 0.0;
    for (std::uint64_t k = 0; k < R; ++k) {
        const double mult_arg = two_pi * static_cast<double>(j % R * k % R) / static_cast<double>(R);
        const double add_arg =
            two_pi * static_cast<double>(t.trace_to_prime(t.from_dlog(k * step), a)) /
            static_cast<double>(t.p());
        sum += std::polar(1.0, mult_arg + add_arg);
    }
    return sum;
}

SemiprimitiveGauss gauss_sum_closed_semiprimitive(std::uint64_t p, std::uint64_t N, unsigned gamma,
                                                  std::uint64_t s_exp) {
    if (N <= 2) throw std::runtime_error("gauss_sum_closed_semiprimitive(): N must exceed 2");
    if (gamma < 1) throw std::runtime_error("gauss_sum_closed_semiprimitive(): gamma must be >= 1");
    if (s_exp < 1 || s_exp >= N)
        throw std::runtime_error("gauss_sum_closed_semiprimitive(): s must lie in [1, N-1]");
    unsigned j = 0;
    std::uint64_t pw = 1 % N;
    for (unsigned cand = 1; cand <= 2 * N; ++cand) {
        pw = pw * (p % N) % N;
        if (pw == N - 1) {
            j = cand;
            break;
        }
    }
    if (j == 0)
        throw std::runtime_error("gauss_sum_closed_semiprimitive(): no j with p^j = -1 (mod N)");
    std::uint64_t r = 1;
    for (unsigned i = 0; i < 2 * j * gamma; ++i) {
        if (r > (std::uint64_t(1) << 62) / p)
            throw std::runtime_error("gauss_sum_closed_semiprimitive(): r overflows");
        r *= p;
    }
    std::uint64_t pj = 1;
    for (unsigned i = 0; i < j; ++i) pj *= p;
    const std::uint64_t quot = (pj + 1) / N;
    int sign;
    if (N % 2 == 0 && p % 2 == 1 && gamma % 2 == 1 && quot % 2 == 1)
        sign = s_exp % 2 ? -1 : 1;
    else
        sign = (gamma - 1) % 2 ? -1 : 1;
    return {r, j, sign * std::sqrt(static_cast<double>(r))};
}

std::complex<double> gauss_sum_closed_quadratic(std::uint64_t p, unsigned s) {
    if (p == 2) throw std::runtime_error("gauss_sum_closed_quadratic(): p must be odd");
    if (s < 1) throw std::runtime_error("gauss_sum_closed_quadratic(): s must be >= 1");
    double rq = 1.0;
    for (unsigned i = 0; i < s; ++i) rq *= static_cast<double>(p);
    const double mag = std::sqrt(rq);
    const double lead = (s - 1) % 2 ? -1.0 : 1.0;
    if (p % 4 == 1) return {lead * mag, 0.0};
    // (sqrt(-1))^s cycles 1, i, -1, -i
    static const std::complex<double> is[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return lead * mag * is[s % 4];
}

}  // namespace codekit
