#include <doctest.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "codekit/field_tower.hpp"

using codekit::FieldElement;
using codekit::FieldTower;

namespace {

// independent polynomial arithmetic on base-p counters
std::uint64_t counter_add(std::uint64_t a, std::uint64_t b, std::uint64_t p, unsigned deg) {
    std::uint64_t r = 0, mul = 1;
    for (unsigned i = 0; i < deg; ++i) {
        r += (a % p + b % p) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return r;
}

std::uint64_t counter_mul(std::uint64_t a, std::uint64_t b, const std::vector<std::uint32_t>& f,
                          std::uint64_t p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    std::vector<std::uint64_t> pa(deg), pb(deg), r(2 * deg, 0);
    for (unsigned i = 0; i < deg; ++i) {
        pa[i] = a % p;
        a /= p;
        pb[i] = b % p;
        b /= p;
    }
    for (unsigned i = 0; i < deg; ++i)
        for (unsigned j = 0; j < deg; ++j) r[i + j] = (r[i + j] + pa[i] * pb[j]) % p;
    for (unsigned i = 2 * deg; i-- > deg;) {
        std::uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (unsigned j = 0; j < deg; ++j) r[i - deg + j] = (r[i - deg + j] + (p - f[j]) * c) % p;
    }
    std::uint64_t out = 0;
    for (unsigned i = deg; i-- > 0;) out = out * p + r[i];
    return out;
}

}  // namespace

TEST_CASE("tower construction and derived parameters") {
    FieldTower t(3, 1, 6, 2, 3);
    CHECK(t.q() == 3);
    CHECK(t.e() == 1);
    CHECK(t.l() == 1);
    CHECK(t.order() == 729);
    CHECK(t.group_order() == 728);

    FieldTower u(2, 2, 4, 4, 2);
    CHECK(u.q() == 4);
    CHECK(u.e() == 2);
    CHECK(u.l() == 1);
    CHECK(u.order() == 256);  // (p^s)^m = 4^4

    CHECK_THROWS_AS(FieldTower(3, 1, 4, 3, 2), std::runtime_error);  // m1 does not divide m
    CHECK_THROWS_AS(FieldTower(4, 1, 2, 1, 2), std::runtime_error);  // p not prime
    CHECK_THROWS_AS(FieldTower(2, 1, 30, 1, 1), std::runtime_error); // over field budget
}

TEST_CASE("construction is deterministic") {
    FieldTower a(3, 1, 6, 2, 3), b(3, 1, 6, 2, 3);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.generator_counter() == b.generator_counter());
    for (std::uint64_t j = 0; j < a.group_order(); j += 37)
        CHECK(a.element_counter(a.from_dlog(j)) == b.element_counter(b.from_dlog(j)));
}

TEST_CASE("add and mul agree with polynomial arithmetic on GF(8) and GF(9)") {
    for (auto params : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}}) {
        FieldTower t(params.first, 1, params.second, 1, params.second);
        const std::uint64_t p = t.p();
        const unsigned deg = t.s() * t.m();
        for (std::uint64_t a = 0; a < t.order(); ++a)
            for (std::uint64_t b = 0; b < t.order(); ++b) {
                FieldElement ea = t.from_counter(a), eb = t.from_counter(b);
                CHECK(t.element_counter(t.add(ea, eb)) == counter_add(a, b, p, deg));
                CHECK(t.element_counter(t.mul(ea, eb)) == counter_mul(a, b, t.modulus(), p));
            }
    }
}

TEST_CASE("zech-backed addition matches polynomial arithmetic above the table cutoff") {
    FieldTower t(2, 1, 13, 13, 1);  // 8192 elements, beyond the full-table range
    const unsigned deg = 13;
    std::uint64_t stride = 97;
    for (std::uint64_t a = 0; a < t.order(); a += stride)
        for (std::uint64_t b = a; b < t.order(); b += 101) {
            FieldElement ea = t.from_counter(a), eb = t.from_counter(b);
            CHECK(t.element_counter(t.add(ea, eb)) == counter_add(a, b, 2, deg));
        }
}

TEST_CASE("generator has full multiplicative order") {
    for (auto params : {std::tuple<std::uint64_t, unsigned, unsigned>{3, 1, 6}, {2, 2, 4}, {5, 1, 4}}) {
        FieldTower t(std::get<0>(params), std::get<1>(params), std::get<2>(params), 1, 1);
        CHECK(t.pow(t.alpha(), static_cast<long long>(t.group_order())) == t.one());
        // alog is a bijection, so no smaller power hits 1
        std::set<std::uint64_t> seen;
        for (std::uint64_t j = 0; j < t.group_order(); ++j)
            seen.insert(t.element_counter(t.from_dlog(j)));
        CHECK(seen.size() == t.group_order());
    }
}

TEST_CASE("field axioms spot checks") {
    FieldTower t(3, 1, 6, 2, 3);
    for (std::uint64_t i = 0; i < t.order(); i += 11) {
        FieldElement x = t.from_counter(i);
        CHECK(t.add(x, t.zero()) == x);
        CHECK(t.mul(x, t.one()) == x);
        CHECK(t.add(x, t.neg(x)) == t.zero());
        if (x != t.zero()) {
            CHECK(t.mul(x, t.inv(x)) == t.one());
            CHECK(t.pow(x, -1) == t.inv(x));
        }
    }
    CHECK_THROWS_AS(t.inv(t.zero()), std::runtime_error);
    CHECK_THROWS_AS((void)t.dlog(t.zero()), std::runtime_error);
    CHECK(t.pow(t.zero(), 0) == t.one());
    CHECK(t.pow(t.zero(), 5) == t.zero());
}

TEST_CASE("relative trace on GF(4) over GF(2)") {
    FieldTower t(2, 1, 2, 1, 2);
    // Tr(x) = x + x^2: 0, 1 -> 0; the two generators -> 1
    CHECK(t.rel_trace(t.zero(), 2, 1) == t.zero());
    CHECK(t.rel_trace(t.one(), 2, 1) == t.zero());
    FieldElement w = t.alpha();
    CHECK(t.rel_trace(w, 2, 1) == t.one());
    CHECK(t.rel_trace(t.mul(w, w), 2, 1) == t.one());
}

TEST_CASE("trace additivity, transitivity, kernel size") {
    FieldTower t(3, 1, 6, 2, 3);
    for (std::uint64_t i = 0; i < t.order(); i += 7)
        for (std::uint64_t j = 0; j < t.order(); j += 13) {
            FieldElement x = t.from_counter(i), y = t.from_counter(j);
            CHECK(t.rel_trace(t.add(x, y), 6, 1) ==
                  t.add(t.rel_trace(x, 6, 1), t.rel_trace(y, 6, 1)));
        }
    // transitivity through the middle field GF(q^2)
    for (std::uint64_t i = 0; i < t.order(); ++i) {
        FieldElement x = t.from_counter(i);
        CHECK(t.rel_trace(x, 6, 1) == t.rel_trace(t.rel_trace(x, 6, 2), 2, 1));
    }
    // kernel of Tr_{q^m2/q} on GF(q^m2) has size q^(m2-1)
    std::uint64_t kernel = 0;
    for (std::uint64_t j = 0; j < t.order(); ++j) {
        FieldElement x = t.from_counter(j);
        if (!t.in_subfield(x, 3)) continue;
        if (t.rel_trace(x, 3, 1) == t.zero()) ++kernel;
    }
    CHECK(kernel == 9);  // 3^(3-1)
    CHECK_THROWS_AS(t.rel_trace(t.alpha(), 2, 1), std::runtime_error);  // alpha outside GF(q^2)
}

TEST_CASE("relative norm: multiplicativity, fibers, zero") {
    FieldTower t(3, 1, 6, 2, 3);
    CHECK(t.rel_norm(t.zero(), 6, 2) == t.zero());
    for (std::uint64_t i = 1; i < t.order(); i += 5)
        for (std::uint64_t j = 1; j < t.order(); j += 17) {
            FieldElement x = t.from_counter(i), y = t.from_counter(j);
            CHECK(t.rel_norm(t.mul(x, y), 6, 2) ==
                  t.mul(t.rel_norm(x, 6, 2), t.rel_norm(y, 6, 2)));
        }
    // every nonzero value of GF(q^2) is hit exactly (q^6-1)/(q^2-1) times
    std::map<std::uint32_t, int> fibers;
    for (std::uint64_t j = 0; j < t.group_order(); ++j)
        fibers[t.rel_norm(t.from_dlog(j), 6, 2).v]++;
    CHECK(fibers.size() == 8);
    for (auto& [v, count] : fibers) {
        CHECK(t.in_subfield({v}, 2));
        CHECK(count == 91);  // 728 / 8
    }
}

TEST_CASE("subfield labels and label arithmetic") {
    FieldTower t(3, 1, 6, 2, 3);
    CHECK(t.subfield_label(t.zero()) == 0);
    CHECK(t.subfield_label(t.one()) == 1);
    CHECK(t.subfield_label(t.beta()) == 2);
    CHECK_THROWS_AS(t.subfield_label(t.alpha()), std::runtime_error);
    for (std::uint32_t a = 0; a < t.q(); ++a) {
        CHECK(t.subfield_label(t.label_element(a)) == a);
        for (std::uint32_t b = 0; b < t.q(); ++b) {
            CHECK(t.label_element(t.label_add(a, b)) ==
                  t.add(t.label_element(a), t.label_element(b)));
            CHECK(t.label_element(t.label_mul(a, b)) ==
                  t.mul(t.label_element(a), t.label_element(b)));
        }
    }
    // GF(q) members are exactly the fixed points of x -> x^q
    std::uint64_t members = 0;
    for (std::uint64_t c = 0; c < t.order(); ++c) {
        FieldElement x = t.from_counter(c);
        bool fixed = t.pow(x, static_cast<long long>(t.q())) == x;
        CHECK(fixed == t.in_subfield(x, 1));
        members += fixed;
    }
    CHECK(members == t.q());
}

TEST_CASE("frobenius and prime-subfield values") {
    FieldTower t(2, 2, 4, 4, 2);
    for (std::uint64_t c = 0; c < t.order(); ++c) {
        FieldElement x = t.from_counter(c);
        CHECK(t.frobenius(x, 1) == t.mul(x, x));
    }
    CHECK(t.prime_value(t.zero()) == 0);
    CHECK(t.prime_value(t.one()) == 1);
    FieldTower u(5, 1, 2, 2, 1);
    FieldElement two = u.add(u.one(), u.one());
    CHECK(u.prime_value(two) == 2);
    CHECK(u.trace_to_prime(u.one(), 2) == 2);  // Tr_{25/5}(1) = 2
}
