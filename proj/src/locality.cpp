#include "codekit/locality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace codekit {

namespace {

// column of the augmented generator at evaluation point x
std::vector<std::uint16_t> generator_column(const FieldTower& t, FieldElement x) {
    std::vector<std::uint16_t> col(t.m1() + 1);
    col[0] = 1;
    const FieldElement nx = t.rel_norm(x, t.m(), t.m1());
    for (unsigned r = 0; r < t.m1(); ++r) {
        const FieldElement a = t.pow(t.alpha1(), r);
        col[r + 1] = static_cast<std::uint16_t>(
            t.subfield_label(t.rel_trace(t.mul(a, nx), t.m1(), 1)));
    }
    return col;
}

void check_identity(const FieldTower& t, const std::vector<FieldElement>& D,
                    const RepairRule& rule) {
    const auto gi = generator_column(t, D.at(rule.target));
    const auto gj = generator_column(t, D.at(rule.helper1));
    const auto gz = generator_column(t, D.at(rule.helper2));
    for (std::size_t r = 0; r < gi.size(); ++r) {
        const std::uint32_t rhs =
            t.label_add(t.label_mul(rule.coef1, gj[r]), t.label_mul(rule.coef2, gz[r]));
        if (rhs != gi[r]) throw std::runtime_error("repair_pair(): column identity failed");
    }
}

}  // namespace

bool repair_feasible(const FieldTower& t) {
    if (t.q() <= 2) return false;
    return std::gcd<std::uint64_t>(t.m() / t.m1(), t.q() - 1) != t.q() - 1;
}

RepairRule repair_pair(const FieldTower& t, const std::vector<FieldElement>& D, std::uint64_t i) {
    const std::uint64_t q = t.q();
    if (q <= 2) throw std::runtime_error("repair_pair(): q must exceed 2");
    if (D.empty() || D.back() != t.zero())
        throw std::runtime_error("repair_pair(): defining set must end with the zero element");
    if (i >= D.size()) throw std::runtime_error("repair_pair(): column index out of range");

    const std::uint64_t ext = t.m() / t.m1();
    const std::uint64_t g = std::gcd(ext, q - 1);
    if (g == q - 1)
        throw std::runtime_error("repair_pair(): no valid t, construction infeasible");
    const std::uint64_t t_exp = g;  // smallest positive admissible t

    // u = beta^{-t}, l = beta^s with s (m/m1) = t (mod q-1), v = 1 - u
    std::uint64_t s = 0;
    while (s * ext % (q - 1) != t_exp) ++s;
    const FieldElement u = t.pow(t.beta(), static_cast<long long>(q - 1 - t_exp));
    const FieldElement l = t.pow(t.beta(), static_cast<long long>(s));
    if (t.mul(u, t.pow(l, static_cast<long long>(ext))) != t.one())
        throw std::runtime_error("repair_pair(): u l^(m/m1) != 1");
    const FieldElement v = t.sub(t.one(), u);

    const std::uint64_t z = D.size() - 1;
    // dlog -> position for the nonzero, dlog-sorted part of D
    auto find_scaled = [&](FieldElement x) -> std::uint64_t {
        const std::uint64_t want = t.dlog(t.mul(l, x));
        std::uint64_t lo = 0, hi = z;
        while (lo < hi) {
            const std::uint64_t mid = (lo + hi) / 2;
            if (t.dlog(D[mid]) < want)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo >= z || t.dlog(D[lo]) != want)
            throw std::runtime_error("repair_pair(): scaled point left the defining set");
        return lo;
    };

    RepairRule rule;
    if (i == z) {
        // invert the rule for column 0: g_z = v^{-1} g_0 - u v^{-1} g_j
        const std::uint64_t j = find_scaled(D[0]);
        const FieldElement vi = t.inv(v);
        rule = {z, 0, j, static_cast<std::uint16_t>(t.subfield_label(vi)),
                static_cast<std::uint16_t>(t.subfield_label(t.neg(t.mul(u, vi))))};
    } else {
        const std::uint64_t j = find_scaled(D[i]);
        if (j == i) throw std::runtime_error("repair_pair(): degenerate helper");
        rule = {i, j, z, static_cast<std::uint16_t>(t.subfield_label(u)),
                static_cast<std::uint16_t>(t.subfield_label(v))};
    }
    check_identity(t, D, rule);
    return rule;
}

std::vector<RepairRule> repair_all(const FieldTower& t, const std::vector<FieldElement>& D) {
    std::vector<RepairRule> rules;
    rules.reserve(D.size());
    for (std::uint64_t i = 0; i < D.size(); ++i) rules.push_back(repair_pair(t, D, i));
    return rules;
}

std::uint64_t locality_search(const LinearCode& code, std::uint64_t r_max) {
    const std::uint64_t n = code.n();
    const std::uint32_t q = code.q();
    if (n > 4096) throw std::runtime_error("locality_search(): length exceeds the search budget");
    if (r_max < 1 || r_max > 2)
        throw std::runtime_error("locality_search(): only r_max in {1, 2} is supported");

    std::vector<std::vector<std::uint16_t>> cols(n);
    for (std::uint64_t i = 0; i < n; ++i) cols[i] = code.column(i);

    // canonical representative of the scalar class: scale so the first
    // nonzero entry is 1; parallel columns share a key
    auto canon = [&](const std::vector<std::uint16_t>& c) {
        std::vector<std::uint16_t> out(c);
        for (auto v : c) {
            if (v == 0) continue;
            const std::uint16_t s = code.label_inv(v);
            for (auto& o : out) o = code.label_mul(s, o);
            break;
        }
        return out;
    };

    std::map<std::vector<std::uint16_t>, std::vector<std::uint64_t>> classes;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto& members = classes[canon(cols[i])];
        if (members.size() < 3) members.push_back(i);  // three suffice to dodge {i, j}
    }
    auto class_member = [&](const std::vector<std::uint16_t>& key, std::uint64_t i,
                            std::uint64_t j) -> bool {
        auto it = classes.find(key);
        if (it == classes.end()) return false;
        for (auto z : it->second)
            if (z != i && z != j) return true;
        return false;
    };

    const std::vector<std::uint16_t> zero_col(code.k(), 0);
    std::uint64_t worst = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (cols[i] == zero_col && n >= 2) {
            worst = std::max<std::uint64_t>(worst, 1);
            continue;
        }
        std::uint64_t need = r_max + 1;
        if (class_member(canon(cols[i]), i, i)) need = 1;
        if (need > 2 && r_max >= 2) {
            std::vector<std::uint16_t> w(code.k());
            for (std::uint64_t j = 0; j < n && need > 2; ++j) {
                if (j == i) continue;
                for (std::uint32_t u = 1; u < q && need > 2; ++u) {
                    bool nonzero = false;
                    for (std::uint32_t r = 0; r < code.k(); ++r) {
                        w[r] = code.label_add(
                            cols[i][r],
                            code.label_neg(code.label_mul(static_cast<std::uint16_t>(u),
                                                          cols[j][r])));
                        nonzero |= w[r] != 0;
                    }
                    if (nonzero && class_member(canon(w), i, j)) need = 2;
                }
            }
        }
        worst = std::max(worst, need);
        if (worst == r_max + 1) return worst;  // sentinel cannot improve
    }
    return worst;
}

}  // namespace codekit
