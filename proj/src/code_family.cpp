#include "codekit/code_family.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "codekit/bounds.hpp"
#include "codekit/linear_code.hpp"
#include "codekit/locality.hpp"

namespace codekit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace {

Int int_pow(Int b, unsigned e) {
    Int r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t rat_to_u64(const Rat& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::runtime_error(std::string("predicted_distribution(): non-integral ") + what);
    const Int n = boost::multiprecision::numerator(r);
    if (n < 0 || n > std::numeric_limits<std::int64_t>::max())
        throw std::runtime_error(std::string("predicted_distribution(): out-of-range ") + what);
    return static_cast<std::uint64_t>(n);
}

}  // namespace

const char* family_case_name(FamilyCase c) {
    switch (c) {
        case FamilyCase::Thm41: return "Thm41";
        case FamilyCase::Thm42: return "Thm42";
        case FamilyCase::Thm43: return "Thm43";
        default: return "Unsupported";
    }
}

FamilyCase classify_case(const FieldTower& t) {
    const unsigned e = t.e(), l = t.l();
    if (e == 1 && l == 1) return FamilyCase::Thm41;
    if (e == 2 && l == 1 && !(t.m1() == 2 && t.m2() == 2)) return FamilyCase::Thm42;
    if (e == 1 && l == 2) return FamilyCase::Thm43;
    return FamilyCase::Unsupported;
}

std::uint64_t PredictedDistribution::total() const {
    std::uint64_t s = 0;
    for (auto& [w, f] : entries) s += f;
    return s;
}

PredictedDistribution predicted_distribution(const FieldTower& t) {
    const FamilyCase fc = classify_case(t);
    if (fc == FamilyCase::Unsupported)
        throw std::runtime_error("predicted_distribution(): no table for this (e, l)");
    if (t.m2() < 2)
        throw std::runtime_error("predicted_distribution(): degenerate table for m2 = 1");

    const Int q = t.q();
    const unsigned m1 = t.m1(), m2 = t.m2();
    const Int qm = int_pow(q, t.m()), qm1 = int_pow(q, m1), qm2 = int_pow(q, m2);
    const Rat denom = Rat((qm1 - 1) * (qm2 - 1));
    const Rat n = Rat((qm - 1) * (qm2 - q)) / Rat(q * (qm2 - 1)) + 1;
    // shared table rows: weight n with multiplicity q-1 for the pure
    // all-ones codewords, plus the b != 0, c = 0 row
    const Rat w_pure = Rat(int_pow(q, m1 - 1) * (qm - 1) * (q - 1) * (int_pow(q, m2 - 1) - 1)) /
                       denom;
    const Rat core = Rat((int_pow(q, m2 - 1) - 1) * (qm1 - int_pow(q, m1 - 1) - 1));

    std::map<std::uint64_t, std::uint64_t> merged;
    auto put = [&](const Rat& w, const Rat& f) {
        merged[rat_to_u64(w, "weight")] += rat_to_u64(f, "frequency");
    };
    put(0, 1);
    put(n, Rat(q - 1));
    if (fc == FamilyCase::Thm41) {
        put(w_pure, Rat(qm1 - 1));
        put(Rat((qm - 1)) * core / denom + 1, Rat((qm1 - 1) * (q - 1)));
    } else if (fc == FamilyCase::Thm42) {
        const unsigned sigma = (m1 + m2) / 2;
        const int sg = sigma % 2 ? -1 : 1;
        const Rat spike1 = Rat(sg * (q - 1) * int_pow(q, sigma - 1));
        const Rat spike2 = Rat(sg * (q - 1) * int_pow(q, sigma - 2));
        const Rat fr = Rat(qm1 - 1) / Rat(q + 1);
        put(Rat((qm - 1) * (q - 1)) * (Rat(int_pow(q, m1 - 1) * (int_pow(q, m2 - 1) - 1)) - spike1) /
                denom,
            fr);
        put(Rat((qm - 1) * (q - 1)) * (Rat(int_pow(q, m1 - 1) * (int_pow(q, m2 - 1) - 1)) + spike2) /
                denom,
            Rat(q) * fr);
        put(Rat(qm - 1) * (core + spike1) / denom + 1, fr * Rat(q - 1));
        put(Rat(qm - 1) * (core - spike2) / denom + 1, Rat(q) * fr * Rat(q - 1));
    } else {
        const unsigned tau = (m1 + m2 - 3) / 2;
        const Rat spike = Rat((q - 1) * int_pow(q, tau));
        const Rat fr = Rat((qm1 - 1) * (q - 1)) / 2;
        put(w_pure, Rat(qm1 - 1));
        put(Rat(qm - 1) * (core + spike) / denom + 1, fr);
        put(Rat(qm - 1) * (core - spike) / denom + 1, fr);
    }

    PredictedDistribution out;
    out.family_case = fc;
    out.entries.assign(merged.begin(), merged.end());
    const Rat conserved = Rat(qm1) * q;
    if (out.total() != rat_to_u64(conserved, "conservation total") ||
        out.entries.front() != std::pair<std::uint64_t, std::uint64_t>{0, 1})
        throw std::runtime_error("predicted_distribution(): table invariants violated");
    return out;
}

std::vector<Int> predicted_dual_low_weights(std::uint64_t q, unsigned m) {
    if (m < 4 || m % 2)
        throw std::runtime_error("predicted_dual_low_weights(): need even m >= 4");
    const Int Q = q;
    const Int qm = int_pow(Q, m);
    const int sg = (m / 2) % 2 ? -1 : 1;  // (-1)^{3m/2} for even m
    if (q == 2) {
        if (m <= 4)
            throw std::runtime_error("predicted_dual_low_weights(): q = 2 needs m > 4");
        const Int num = (qm - 1) * (qm * qm - 12 * qm - 16 * sg * int_pow(Q, m / 2));
        if (num % 1944 != 0)
            throw std::runtime_error("predicted_dual_low_weights(): A'_4 not integral");
        return {0, 0, 0, num / 1944};
    }
    const Int spike = sg * (int_pow(Q, m / 2 + 1) - int_pow(Q, m / 2 + 2));
    const Int num = (qm - 1) * (Q * Q - 3 * Q + 2) * (Q + qm + 2 * Q * Q + spike);
    const Int den = 6 * int_pow(Q + 1, 3);
    if (num % den != 0)
        throw std::runtime_error("predicted_dual_low_weights(): A'_3 not integral");
    return {0, 0, num / den};
}

VerificationReport verify_family(const FieldTower& t, unsigned max_enum_bits) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.p = t.p();
    r.s = t.s();
    r.q = t.q();
    r.m = t.m();
    r.m1 = t.m1();
    r.m2 = t.m2();
    r.e = t.e();
    r.l = t.l();
    const FamilyCase fc = classify_case(t);
    r.case_tag = family_case_name(fc);

    LinearCode code = build_augmented_code(t);
    r.n = code.n();
    r.k = code.k();

    // q^k <= 2^max_enum_bits, overflow-safely
    {
        double bits = 0;
        for (std::uint32_t i = 0; i < code.k(); ++i) bits += std::log2(double(code.q()));
        if (bits > double(max_enum_bits))
            throw std::runtime_error("verify_family(): message space exceeds the budget");
    }

    const auto dist = code.weight_distribution_brute();
    std::uint64_t conserved = 0;
    for (auto f : dist) conserved += f;
    if (conserved != code.message_space())
        throw std::runtime_error("verify_family(): frequency conservation failed");

    r.d = LinearCode::min_distance(dist);
    r.weight_enumerator = LinearCode::enumerator_string(dist);
    r.divisor = LinearCode::weight_divisor(dist);
    r.self_orthogonal = code.is_self_orthogonal();

    const auto dual = code.macwilliams_dual(dist);
    r.dual_min_distance = dual_min_distance(dual);
    const std::size_t low = std::min<std::size_t>(4, r.n);
    for (std::size_t w = 1; w <= low; ++w) r.dual_low_weights.push_back(dual[w].str());
    const auto pless = code.pless_low_dual_weights(dist);
    for (std::size_t w = 0; w < low; ++w)
        if (pless[w] != dual[w + 1]) {
            r.failures.push_back("pless_matches_macwilliams");
            break;
        }

    // closed-form prediction, where one exists
    if (fc != FamilyCase::Unsupported) {
        const auto pred = predicted_distribution(t);
        std::map<std::uint64_t, std::uint64_t> brute;
        for (std::uint64_t w = 0; w < dist.size(); ++w)
            if (dist[w]) brute[w] = dist[w];
        const bool match =
            std::equal(pred.entries.begin(), pred.entries.end(), brute.begin(), brute.end(),
                       [](auto& a, auto& b) { return a.first == b.first && a.second == b.second; });
        r.predicted_match = match;
        if (!match) r.failures.push_back("predicted_distribution");
    }

    // self-orthogonality and q-divisibility under each case's hypotheses
    const bool odd_q = t.p() != 2;
    bool so_claim = false;
    if (fc == FamilyCase::Thm41) so_claim = r.m1 >= 2 && r.m2 >= 2 && odd_q;
    if (fc == FamilyCase::Thm42) so_claim = r.m1 >= 2 && r.m2 >= 2 && r.m1 + r.m2 >= 6 && odd_q;
    if (fc == FamilyCase::Thm43) so_claim = r.m1 >= 2 && r.m2 >= 2 && r.m1 + r.m2 >= 5 && odd_q;
    if (so_claim) {
        if (r.divisor % r.q != 0) r.failures.push_back("q_divisible");
        if (!r.self_orthogonal) r.failures.push_back("self_orthogonal");
    }

    // dual claims for the m = m1, m2 = 2 shape
    if (fc == FamilyCase::Thm42 && r.m1 == r.m && r.m2 == 2) {
        if (r.q > 2) {
            if (r.dual_min_distance != 3) r.failures.push_back("dual_min_distance");
            const auto want = predicted_dual_low_weights(r.q, r.m);
            for (std::size_t w = 0; w < want.size() && w < low; ++w)
                if (want[w] != dual[w + 1]) {
                    r.failures.push_back("dual_low_weights_closed_form");
                    break;
                }
        } else if (r.m > 4) {
            if (r.dual_min_distance != 4) r.failures.push_back("dual_min_distance");
            const auto want = predicted_dual_low_weights(2, r.m);
            for (std::size_t w = 0; w < want.size() && w < low; ++w)
                if (want[w] != dual[w + 1]) {
                    r.failures.push_back("dual_low_weights_closed_form");
                    break;
                }
            if (!sphere_packing_distance_optimal(r.n, r.n - r.k, 4, 2))
                r.failures.push_back("dual_sphere_packing_optimal");
        }
    }

    // bounds, with the family's locality r = 2
    r.bounds.griesmer_min_length = griesmer_min_length(r.k, r.d, r.q);
    r.bounds.griesmer_optimal =
        r.bounds.griesmer_min_length <= r.n && griesmer_min_length(r.k, r.d + 1, r.q) > r.n;
    r.bounds.sphere_packing_distance_optimal =
        sphere_packing_distance_optimal(r.n, r.k, r.d, r.q);
    if (r.n > 2) {
        r.bounds.cm_upper = cm_locality_bound(r.n, r.d, r.q, 2);
        if (r.k == r.bounds.cm_upper)
            r.bounds.cm_verdict = "optimal";
        else if (r.k + 1 == r.bounds.cm_upper)
            r.bounds.cm_verdict = "almost-optimal";
        else
            r.bounds.cm_verdict = "neither";
    } else {
        r.bounds.cm_upper = 0;
        r.bounds.cm_verdict = "neither";
    }

    r.locality = locality_search(code);
    if (r.q > 2) {
        if (repair_feasible(t)) {
            r.repair_rules = repair_all(t, defining_set(t));
            if (r.locality != 2) r.failures.push_back("locality");
        } else {
            r.flags.push_back("explicit repair construction infeasible; locality_search returned " +
                              std::to_string(r.locality) +
                              (r.locality > 2 ? " (no pair repair for some column)" : ""));
        }
    }

    r.runtime_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                  std::chrono::steady_clock::now() - t0)
                                                  .count());
    return r;
}

}  // namespace codekit
