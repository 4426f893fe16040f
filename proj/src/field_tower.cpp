#include "codekit/field_tower.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace codekit {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// dense polynomials over GF(p), lowest coefficient first
using Poly = std::vector<std::uint64_t>;

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

// a * b reduced by the monic modulus f
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    const std::size_t D = f.size() - 1;
    Poly r(2 * D, 0);
    for (std::size_t i = 0; i < D; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < D; ++j)
            if (b[j]) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t i = 2 * D; i-- > D;) {
        std::uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < D; ++j)
            r[i - D + j] = (r[i - D + j] + (p - f[j] % p) * c) % p;
    }
    r.resize(D);
    return r;
}

Poly x_pow_mod(std::uint64_t e, const Poly& f, std::uint64_t p) {
    const std::size_t D = f.size() - 1;
    Poly r(D, 0), b(D, 0);
    r[0] = 1;
    if (D == 1) {
        // x mod f = -c_0
        b[0] = (p - f[0] % p) % p;
    } else {
        b[1] = 1;
    }
    while (e) {
        if (e & 1) r = mul_mod(r, b, f, p);
        b = mul_mod(b, b, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    while (degree(b) >= 0) {
        int da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        std::uint64_t lead_inv = mod_pow(b[db], p - 2, p);
        while ((da = degree(a)) >= db) {
            std::uint64_t c = a[da] * lead_inv % p;
            for (int j = 0; j <= db; ++j)
                a[da - db + j] = (a[da - db + j] + (p - b[j]) * c) % p;
            a[da] = 0;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin test: f irreducible over GF(p) iff x^(p^D) = x (mod f) and
// gcd(x^(p^(D/r)) - x, f) = 1 for every prime r | D
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const unsigned D = static_cast<unsigned>(f.size() - 1);
    Poly x(D, 0);
    if (D == 1)
        x[0] = (p - f[0] % p) % p;
    else
        x[1] = 1;
    Poly t = x_pow_mod(pow_u64(p, D), f, p);
    if (t != x) return false;
    for (std::uint64_t r : prime_factors(D)) {
        Poly h = x_pow_mod(pow_u64(p, static_cast<unsigned>(D / r)), f, p);
        for (unsigned j = 0; j < D; ++j) h[j] = (h[j] + p - x[j]) % p;
        Poly g = poly_gcd(f, h, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

Poly counter_to_poly(std::uint64_t v, unsigned len, std::uint64_t p) {
    Poly c(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

std::uint64_t poly_to_counter(const Poly& c, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

}  // namespace

FieldTower::FieldTower(std::uint64_t p, unsigned s, unsigned m, unsigned m1, unsigned m2,
                       unsigned max_field_bits)
    : p_(p), s_(s), m_(m), m1_(m1), m2_(m2) {
    if (!is_prime(p)) throw std::runtime_error("FieldTower: p is not prime");
    if (s < 1 || m < 1 || m1 < 1 || m2 < 1)
        throw std::runtime_error("FieldTower: degrees must be positive");
    if (m % m1 != 0) throw std::runtime_error("FieldTower: m1 does not divide m");
    if (m % m2 != 0) throw std::runtime_error("FieldTower: m2 does not divide m");

    degree_ = s * m;
    // budget check without overflow
    {
        std::uint64_t v = 1;
        const std::uint64_t cap = std::uint64_t(1) << max_field_bits;
        for (unsigned i = 0; i < degree_; ++i) {
            if (v > cap / p)
                throw std::runtime_error("FieldTower: p^(s*m) exceeds the field budget");
            v *= p;
        }
        order_ = v;
        if (order_ > cap)
            throw std::runtime_error("FieldTower: p^(s*m) exceeds the field budget");
    }
    q_ = pow_u64(p, s);
    N_ = order_ - 1;
    e_ = static_cast<unsigned>(std::gcd(m1_, m2_));
    l_ = static_cast<unsigned>(std::gcd(std::uint64_t(m2_ / e_), q_ - 1));

    // deterministic modulus: first irreducible in counter order
    Poly f;
    bool found = false;
    for (std::uint64_t v = 0; v < order_; ++v) {
        f = counter_to_poly(v, degree_, p);
        f.push_back(1);
        if (is_irreducible(f, p)) {
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("FieldTower: no irreducible modulus found");
    modulus_.assign(f.begin(), f.end());

    // deterministic generator: first polynomial-basis element of order N
    auto factors = prime_factors(N_);
    Poly gen;
    found = false;
    for (std::uint64_t v = 1; v < order_; ++v) {
        Poly g = counter_to_poly(v, degree_, p);
        bool ok = true;
        for (std::uint64_t r : factors) {
            // g^(N/r) via square-and-multiply
            Poly acc(degree_, 0);
            acc[0] = 1;
            Poly b = g;
            std::uint64_t e = N_ / r;
            while (e) {
                if (e & 1) acc = mul_mod(acc, b, f, p);
                b = mul_mod(b, b, f, p);
                e >>= 1;
            }
            Poly one(degree_, 0);
            one[0] = 1;
            if (acc == one) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            gen_counter_ = v;
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("FieldTower: no generator found");

    // log/antilog tables
    alog_.assign(N_, 0);
    dlog_.assign(order_, 0);
    Poly cur(degree_, 0);
    cur[0] = 1;
    for (std::uint64_t j = 0; j < N_; ++j) {
        std::uint64_t c = poly_to_counter(cur, p);
        alog_[j] = static_cast<std::uint32_t>(c);
        dlog_[c] = static_cast<std::uint32_t>(j);
        cur = mul_mod(cur, gen, f, p);
    }
    if (poly_to_counter(cur, p) != 1)
        throw std::runtime_error("FieldTower: generator order check failed");

    // addition backend: full table up to 2^12 elements, Zech logarithms above
    if (order_ <= (std::uint64_t(1) << 12)) {
        add_tbl_.assign(order_ * order_, 0);
        for (std::uint64_t a = 0; a < order_; ++a) {
            Poly pa = a ? counter_to_poly(alog_[a - 1], degree_, p) : Poly(degree_, 0);
            for (std::uint64_t b = a; b < order_; ++b) {
                Poly pb = b ? counter_to_poly(alog_[b - 1], degree_, p) : Poly(degree_, 0);
                Poly ps(degree_, 0);
                for (unsigned i = 0; i < degree_; ++i) ps[i] = (pa[i] + pb[i]) % p;
                std::uint64_t c = poly_to_counter(ps, p);
                std::uint16_t r = static_cast<std::uint16_t>(c ? dlog_[c] + 1 : 0);
                add_tbl_[a * order_ + b] = r;
                add_tbl_[b * order_ + a] = r;
            }
        }
    } else {
        zech_.assign(N_, 0);
        for (std::uint64_t k = 0; k < N_; ++k) {
            Poly pk = counter_to_poly(alog_[k], degree_, p);
            pk[0] = (pk[0] + 1) % p;
            std::uint64_t c = poly_to_counter(pk, p);
            zech_[k] = static_cast<std::uint32_t>(c ? dlog_[c] : N_);
        }
    }

    // -1, subfield generators
    {
        std::uint64_t c = (p - 1) % p;  // constant polynomial p-1
        neg_one_ = c ? FieldElement{dlog_[c] + 1} : FieldElement{0};
    }
    beta_ = from_dlog(N_ / (q_ - 1) % N_);
    alpha1_ = from_dlog(N_ / (pow_u64(p, s * m1) - 1) % N_);
    alpha2_ = from_dlog(N_ / (pow_u64(p, s * m2) - 1) % N_);

    // GF(q) label tables (labels 0 and 1+j for beta^j)
    if (q_ <= (std::uint64_t(1) << 12)) {
        std::vector<FieldElement> el(q_);
        el[0] = zero();
        for (std::uint64_t j = 0; j + 1 < q_; ++j) el[j + 1] = pow(beta_, static_cast<long long>(j));
        lab_add_.assign(q_ * q_, 0);
        lab_mul_.assign(q_ * q_, 0);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b < q_; ++b) {
                lab_add_[a * q_ + b] = subfield_label(add(el[a], el[b]));
                lab_mul_[a * q_ + b] = subfield_label(mul(el[a], el[b]));
            }
    }
}

std::uint64_t FieldTower::dlog(FieldElement x) const {
    if (x.v == 0) throw std::runtime_error("FieldTower::dlog(): zero has no discrete log");
    return x.v - 1;
}

std::uint64_t FieldTower::element_counter(FieldElement x) const {
    return x.v ? alog_[x.v - 1] : 0;
}

FieldElement FieldTower::from_counter(std::uint64_t c) const {
    if (c >= order_) throw std::runtime_error("FieldTower::from_counter(): counter out of range");
    return c ? FieldElement{dlog_[c] + 1} : FieldElement{0};
}

FieldElement FieldTower::add(FieldElement a, FieldElement b) const {
    if (!add_tbl_.empty()) return {add_tbl_[std::uint64_t(a.v) * order_ + b.v]};
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    std::uint64_t i = a.v - 1, j = b.v - 1;
    if (i > j) std::swap(i, j);
    std::uint64_t k = j - i;
    std::uint64_t z = zech_[k];
    if (z == N_) return {0};
    return from_dlog(i + z);
}

FieldElement FieldTower::neg(FieldElement a) const {
    if (a.v == 0) return a;
    return mul(a, neg_one_);
}

FieldElement FieldTower::mul(FieldElement a, FieldElement b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return from_dlog(std::uint64_t(a.v - 1) + (b.v - 1));
}

FieldElement FieldTower::inv(FieldElement a) const {
    if (a.v == 0) throw std::runtime_error("FieldTower::inv(): zero is not invertible");
    return from_dlog(N_ - (a.v - 1) % N_);
}

FieldElement FieldTower::pow(FieldElement a, long long e) const {
    if (a.v == 0) {
        if (e == 0) return one();
        if (e < 0) throw std::runtime_error("FieldTower::pow(): negative power of zero");
        return {0};
    }
    long long em = e % static_cast<long long>(N_);
    if (em < 0) em += static_cast<long long>(N_);
    return from_dlog(std::uint64_t(a.v - 1) * static_cast<std::uint64_t>(em));
}

FieldElement FieldTower::frobenius(FieldElement x, unsigned t) const {
    if (x.v == 0) return x;
    return from_dlog(std::uint64_t(x.v - 1) * mod_pow(p_, t, N_));
}

std::uint64_t FieldTower::subfield_step(unsigned a) const {
    if (a == 0 || m_ % a != 0)
        throw std::runtime_error("FieldTower: subfield degree does not divide m");
    return N_ / (pow_u64(p_, s_ * a) - 1);
}

bool FieldTower::in_subfield(FieldElement x, unsigned a) const {
    if (x.v == 0) return true;
    return (x.v - 1) % subfield_step(a) == 0;
}

FieldElement FieldTower::rel_trace(FieldElement x, unsigned a, unsigned b) const {
    if (a % b != 0) throw std::runtime_error("FieldTower::rel_trace(): b does not divide a");
    if (!in_subfield(x, a)) throw std::runtime_error("FieldTower::rel_trace(): element outside GF(q^a)");
    FieldElement t = zero();
    FieldElement cur = x;
    const unsigned steps = a / b;
    for (unsigned j = 0; j < steps; ++j) {
        t = add(t, cur);
        cur = frobenius(cur, s_ * b);
    }
    return t;
}

FieldElement FieldTower::rel_norm(FieldElement x, unsigned a, unsigned b) const {
    if (a % b != 0) throw std::runtime_error("FieldTower::rel_norm(): b does not divide a");
    if (!in_subfield(x, a)) throw std::runtime_error("FieldTower::rel_norm(): element outside GF(q^a)");
    if (x.v == 0) return x;
    std::uint64_t ea = pow_u64(q_, a) - 1, eb = pow_u64(q_, b) - 1;
    return pow(x, static_cast<long long>(ea / eb));
}

std::uint64_t FieldTower::trace_to_prime(FieldElement x, unsigned a) const {
    if (!in_subfield(x, a))
        throw std::runtime_error("FieldTower::trace_to_prime(): element outside GF(q^a)");
    FieldElement t = zero();
    FieldElement cur = x;
    const unsigned steps = s_ * a;
    for (unsigned j = 0; j < steps; ++j) {
        t = add(t, cur);
        cur = frobenius(cur, 1);
    }
    return prime_value(t);
}

std::uint64_t FieldTower::prime_value(FieldElement x) const {
    if (x.v == 0) return 0;
    std::uint64_t c = alog_[x.v - 1];
    if (c >= p_) throw std::runtime_error("FieldTower::prime_value(): element outside GF(p)");
    return c;
}

std::uint32_t FieldTower::subfield_label(FieldElement x) const {
    if (x.v == 0) return 0;
    std::uint64_t step = N_ / (q_ - 1);
    std::uint64_t j = x.v - 1;
    if (j % step != 0)
        throw std::runtime_error("FieldTower::subfield_label(): element outside GF(q)");
    return static_cast<std::uint32_t>(1 + j / step);
}

FieldElement FieldTower::label_element(std::uint32_t label) const {
    if (label == 0) return zero();
    if (label >= q_) throw std::runtime_error("FieldTower::label_element(): label out of range");
    return from_dlog(std::uint64_t(label - 1) * (N_ / (q_ - 1)));
}

std::uint32_t FieldTower::label_add(std::uint32_t a, std::uint32_t b) const {
    if (!lab_add_.empty()) return lab_add_[std::uint64_t(a) * q_ + b];
    return subfield_label(add(label_element(a), label_element(b)));
}

std::uint32_t FieldTower::label_mul(std::uint32_t a, std::uint32_t b) const {
    if (!lab_mul_.empty()) return lab_mul_[std::uint64_t(a) * q_ + b];
    return subfield_label(mul(label_element(a), label_element(b)));
}

std::uint32_t FieldTower::label_neg(std::uint32_t a) const {
    return subfield_label(neg(label_element(a)));
}

std::uint32_t FieldTower::label_inv(std::uint32_t a) const {
    if (a == 0) throw std::runtime_error("FieldTower::label_inv(): zero label");
    return subfield_label(inv(label_element(a)));
}

}  // namespace codekit
