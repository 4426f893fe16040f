#include "codekit/linear_code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "codekit/parallel.hpp"

namespace codekit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

LinearCode::LinearCode(std::uint32_t q, std::vector<std::uint16_t> add_table,
                       std::vector<std::uint16_t> mul_table,
                       std::vector<std::vector<std::uint16_t>> rows)
    : q_(q), add_(std::move(add_table)), mul_(std::move(mul_table)), rows_(std::move(rows)) {
    if (q_ < 2) throw std::runtime_error("LinearCode: q must be at least 2");
    if (add_.size() != std::size_t(q_) * q_ || mul_.size() != std::size_t(q_) * q_)
        throw std::runtime_error("LinearCode: label tables must be q x q");
    if (rows_.empty()) throw std::runtime_error("LinearCode: no generator rows");
    n_ = rows_[0].size();
    if (n_ == 0) throw std::runtime_error("LinearCode: empty rows");
    k_ = static_cast<std::uint32_t>(rows_.size());
    for (auto& r : rows_) {
        if (r.size() != n_) throw std::runtime_error("LinearCode: ragged generator rows");
        for (auto v : r)
            if (v >= q_) throw std::runtime_error("LinearCode: label out of range");
    }
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        bool found_neg = false, found_inv = (a == 0);
        for (std::uint32_t b = 0; b < q_; ++b) {
            if (add_[a * q_ + b] == 0) {
                neg_[a] = static_cast<std::uint16_t>(b);
                found_neg = true;
            }
            if (a != 0 && mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<std::uint16_t>(b);
                found_inv = true;
            }
        }
        if (!found_neg || !found_inv)
            throw std::runtime_error("LinearCode: label tables are not a field");
    }
}

std::vector<std::uint16_t> LinearCode::column(std::uint64_t i) const {
    std::vector<std::uint16_t> col(k_);
    for (std::uint32_t r = 0; r < k_; ++r) col[r] = rows_[r].at(i);
    return col;
}

std::uint16_t LinearCode::label_inv(std::uint16_t a) const {
    if (a == 0) throw std::runtime_error("LinearCode::label_inv(): zero label");
    return inv_[a];
}

std::uint32_t LinearCode::rank() const {
    std::vector<std::vector<std::uint16_t>> m = rows_;
    std::uint32_t r = 0;
    for (std::uint64_t c = 0; c < n_ && r < k_; ++c) {
        std::uint32_t piv = r;
        while (piv < k_ && m[piv][c] == 0) ++piv;
        if (piv == k_) continue;
        std::swap(m[r], m[piv]);
        const std::uint16_t s = inv_[m[r][c]];
        for (std::uint64_t j = c; j < n_; ++j) m[r][j] = label_mul(m[r][j], s);
        for (std::uint32_t i = r + 1; i < k_; ++i) {
            const std::uint16_t f = m[i][c];
            if (f == 0) continue;
            for (std::uint64_t j = c; j < n_; ++j)
                m[i][j] = label_add(m[i][j], neg_[label_mul(f, m[r][j])]);
        }
        ++r;
    }
    return r;
}

std::uint64_t LinearCode::message_space() const {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (total > (std::uint64_t(1) << 62) / q_)
            throw std::runtime_error("LinearCode::message_space(): q^k too large to enumerate");
        total *= q_;
    }
    return total;
}

std::vector<std::uint64_t> LinearCode::weight_distribution_brute() const {
    const std::uint64_t total = message_space();

    // dr[j][c] = ((c+1) mod q) row_j - c row_j, so one odometer step on
    // digit j (from value c) is a single row addition. Repeatedly adding
    // row_j itself would only reach prime-field multiples when q = p^s.
    std::vector<std::vector<std::vector<std::uint16_t>>> dr(k_);
    for (std::uint32_t j = 0; j < k_; ++j) {
        dr[j].assign(q_, std::vector<std::uint16_t>(n_));
        for (std::uint32_t c = 0; c < q_; ++c) {
            const std::uint16_t c1 = static_cast<std::uint16_t>((c + 1) % q_);
            for (std::uint64_t i = 0; i < n_; ++i) {
                const std::uint16_t hi = label_mul(c1, rows_[j][i]);
                const std::uint16_t lo = label_mul(static_cast<std::uint16_t>(c), rows_[j][i]);
                dr[j][c][i] = label_add(hi, neg_[lo]);
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> partial(worker_count(),
                                                    std::vector<std::uint64_t>(n_ + 1, 0));
    parallel_chunks(total, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
        std::vector<std::uint64_t>& counts = partial[slot];
        std::vector<std::uint32_t> digit(k_, 0);
        std::vector<std::uint16_t> cw(n_, 0);
        {
            std::uint64_t msg = lo;
            for (std::uint32_t j = 0; j < k_; ++j) {
                digit[j] = static_cast<std::uint32_t>(msg % q_);
                msg /= q_;
                if (digit[j] == 0) continue;
                const std::uint16_t c = static_cast<std::uint16_t>(digit[j]);
                for (std::uint64_t i = 0; i < n_; ++i)
                    cw[i] = label_add(cw[i], label_mul(c, rows_[j][i]));
            }
        }
        for (std::uint64_t msg = lo; msg < hi; ++msg) {
            std::uint64_t w = 0;
            for (std::uint64_t i = 0; i < n_; ++i) w += cw[i] != 0;
            ++counts[w];
            if (msg + 1 == hi) break;
            for (std::uint32_t j = 0;; ++j) {
                const std::uint32_t c = digit[j];
                digit[j] = (c + 1) % q_;
                const std::vector<std::uint16_t>& d = dr[j][c];
                for (std::uint64_t i = 0; i < n_; ++i) cw[i] = add_[cw[i] * q_ + d[i]];
                if (digit[j] != 0) break;
            }
        }
    });

    std::vector<std::uint64_t> dist(n_ + 1, 0);
    for (auto& part : partial)
        for (std::uint64_t w = 0; w <= n_; ++w) dist[w] += part[w];
    return dist;
}

bool LinearCode::is_self_orthogonal() const {
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = i; j < k_; ++j) {
            std::uint16_t acc = 0;
            for (std::uint64_t t = 0; t < n_; ++t)
                acc = label_add(acc, label_mul(rows_[i][t], rows_[j][t]));
            if (acc != 0) return false;
        }
    return true;
}

std::uint64_t LinearCode::weight_divisor(const std::vector<std::uint64_t>& dist) {
    std::uint64_t g = 0;
    for (std::uint64_t w = 1; w < dist.size(); ++w)
        if (dist[w] != 0) g = std::gcd(g, w);
    return g;
}

std::string LinearCode::enumerator_string(const std::vector<std::uint64_t>& dist) {
    std::string out;
    for (std::uint64_t w = 0; w < dist.size(); ++w) {
        if (dist[w] == 0) continue;
        if (!out.empty()) out += '+';
        if (w == 0) {
            out += std::to_string(dist[w]);
        } else {
            if (dist[w] != 1) out += std::to_string(dist[w]);
            out += "z^" + std::to_string(w);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

std::uint64_t LinearCode::min_distance(const std::vector<std::uint64_t>& dist) {
    for (std::uint64_t w = 1; w < dist.size(); ++w)
        if (dist[w] != 0) return w;
    return 0;
}

std::vector<Int> LinearCode::macwilliams_dual(const std::vector<std::uint64_t>& dist) const {
    if (dist.size() != n_ + 1)
        throw std::runtime_error("LinearCode::macwilliams_dual(): distribution length mismatch");
    const std::uint64_t n = n_;
    std::vector<std::vector<Int>> binom(n + 1, std::vector<Int>(n + 1, 0));
    for (std::uint64_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::uint64_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Int(0));
    }
    Int qk = 1;
    for (std::uint32_t i = 0; i < k_; ++i) qk *= q_;
    std::vector<Int> qm1pow(n + 1);  // (q-1)^t
    qm1pow[0] = 1;
    for (std::uint64_t t = 1; t <= n; ++t) qm1pow[t] = qm1pow[t - 1] * (q_ - 1);

    std::vector<Int> dual(n + 1);
    for (std::uint64_t w = 0; w <= n; ++w) {
        Int s = 0;
        for (std::uint64_t i = 0; i <= n; ++i) {
            if (dist[i] == 0) continue;
            Int kw = 0;
            for (std::uint64_t j = 0; j <= w; ++j) {
                if (j > i || w - j > n - i) continue;
                Int term = qm1pow[w - j] * binom[i][j] * binom[n - i][w - j];
                if (j % 2)
                    kw -= term;
                else
                    kw += term;
            }
            s += Int(dist[i]) * kw;
        }
        Int quo = s / qk, rem = s % qk;
        if (rem != 0 || quo < 0)
            throw std::runtime_error("LinearCode::macwilliams_dual(): non-integral dual count");
        dual[w] = quo;
    }
    if (dual[0] != 1)
        throw std::runtime_error("LinearCode::macwilliams_dual(): A'_0 != 1");
    return dual;
}

std::vector<Int> LinearCode::pless_low_dual_weights(const std::vector<std::uint64_t>& dist) const {
    if (dist.size() != n_ + 1)
        throw std::runtime_error(
            "LinearCode::pless_low_dual_weights(): distribution length mismatch");
    const Rat n = n_;
    const Rat q = q_;
    const long m = static_cast<long>(k_) - 1;
    auto qpow = [&](long e) {
        Rat r = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= q;
        return e < 0 ? Rat(1) / r : r;
    };
    Rat S[4] = {0, 0, 0, 0};
    for (std::uint64_t w = 1; w <= n_; ++w) {
        if (dist[w] == 0) continue;
        Rat wp = w;
        for (int t = 0; t < 4; ++t) {
            S[t] += wp * dist[w];
            wp *= w;
        }
    }
    // triangular power-moment system: the t-th moment of the primal
    // distribution pins A'_1..A'_t once the lower ones are known
    Rat A1 = (qpow(m) * (q * n - n) - S[0]) / qpow(m);
    Rat A2 = (S[1] / qpow(m - 1) - (q - 1) * n * (q * n - n + 1) +
              (2 * q * n - q - 2 * n + 2) * A1) /
             2;
    Rat c3 = (q - 1) * n * (q * q * n * n - 2 * q * n * n + 3 * q * n - q + n * n - 3 * n + 2);
    Rat c3a1 = 3 * q * q * n * n - 3 * q * q * n - 6 * q * n * n + 12 * q * n + q * q - 6 * q +
               3 * n * n - 9 * n + 6;
    Rat A3 = (c3 - c3a1 * A1 + 6 * (q * n - q - n + 2) * A2 - S[2] / qpow(m - 2)) / 6;
    Rat n2 = n * n, n3 = n * n * n, q2 = q * q, q3 = q * q * q;
    Rat c4 = (q - 1) * n *
             (q3 * n3 - 3 * q2 * n3 + 6 * q2 * n2 - 4 * q2 * n + q2 + 3 * q * n3 - 12 * q * n2 +
              15 * q * n - 6 * q - n3 + 6 * n2 - 11 * n + 6);
    Rat c4a1 = 4 * q3 * n3 - 6 * q3 * n2 + 4 * q3 * n - q3 - 12 * q2 * n3 + 36 * q2 * n2 -
               38 * q2 * n + 14 * q2 + 12 * q * n3 - 54 * q * n2 + 78 * q * n - 36 * q - 4 * n3 +
               24 * n2 - 44 * n + 24;
    Rat c4a2 = 12 * q2 * n2 - 24 * q2 * n + 14 * q2 - 24 * q * n2 + 84 * q * n - 72 * q + 12 * n2 -
               60 * n + 72;
    Rat c4a3 = 24 * q * n - 36 * q - 24 * n + 72;
    Rat A4 = (S[3] / qpow(m - 3) - c4 + c4a1 * A1 - c4a2 * A2 + c4a3 * A3) / 24;

    std::vector<Int> out;
    for (const Rat& a : {A1, A2, A3, A4}) {
        if (boost::multiprecision::denominator(a) != 1)
            throw std::runtime_error("LinearCode::pless_low_dual_weights(): non-integral solution");
        out.push_back(boost::multiprecision::numerator(a));
    }
    return out;
}

std::uint64_t dual_min_distance(const std::vector<Int>& dual_dist) {
    for (std::uint64_t w = 1; w < dual_dist.size(); ++w)
        if (dual_dist[w] != 0) return w;
    return 0;
}

std::vector<FieldElement> defining_set(const FieldTower& t) {
    std::uint64_t T2 = 1;
    for (unsigned i = 0; i < t.m2(); ++i) T2 *= t.q();
    --T2;
    std::vector<char> keep(T2);
    for (std::uint64_t j = 0; j < T2; ++j) {
        FieldElement y = t.pow(t.alpha2(), static_cast<long long>(j));
        keep[j] = t.rel_trace(y, t.m2(), 1) == t.zero();
    }
    std::vector<FieldElement> D;
    const std::uint64_t N = t.group_order();
    for (std::uint64_t j = 0; j < N; ++j)
        if (keep[j % T2]) D.push_back(t.from_dlog(j));  // norm to GF(q^m2) strides the dlog
    D.push_back(t.zero());
    return D;
}

namespace {

std::vector<std::uint16_t> narrow_table(const std::vector<std::uint32_t>& t) {
    if (t.empty())
        throw std::runtime_error("build_augmented_code(): q too large for label tables");
    return {t.begin(), t.end()};
}

}  // namespace

LinearCode build_augmented_code(const FieldTower& t) {
    const auto D = defining_set(t);
    const std::uint64_t n = D.size();
    const unsigned m1 = t.m1();
    std::vector<std::vector<std::uint16_t>> rows(m1 + 1, std::vector<std::uint16_t>(n, 0));
    for (std::uint64_t i = 0; i < n; ++i) rows[0][i] = 1;  // the all-ones augmentation
    for (unsigned r = 1; r <= m1; ++r) {
        const FieldElement a = t.pow(t.alpha1(), static_cast<long long>(r - 1));
        for (std::uint64_t i = 0; i < n; ++i) {
            const FieldElement nx = t.rel_norm(D[i], t.m(), t.m1());
            const FieldElement tr = t.rel_trace(t.mul(a, nx), t.m1(), 1);
            rows[r][i] = static_cast<std::uint16_t>(t.subfield_label(tr));
        }
    }
    LinearCode code(static_cast<std::uint32_t>(t.q()), narrow_table(t.label_add_table()),
                    narrow_table(t.label_mul_table()), std::move(rows));
    if (code.rank() != m1 + 1)
        throw std::runtime_error("build_augmented_code(): generator matrix is rank deficient");
    return code;
}

}  // namespace codekit
