#include "codekit/bounds.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace codekit {

using Int = boost::multiprecision::cpp_int;

std::uint64_t griesmer_min_length(std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    if (k < 1 || d < 1 || q < 2) throw std::runtime_error("griesmer_min_length(): bad parameters");
    std::uint64_t total = 0, qi = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (qi >= d) {
            // every remaining term is 1
            total += k - i;
            break;
        }
        total += (d + qi - 1) / qi;
        qi = qi > d / q ? d : qi * q;  // clamp instead of overflowing
    }
    return total;
}

std::uint64_t griesmer_k_upper(std::uint64_t n, std::uint64_t d, std::uint64_t q) {
    if (d < 1 || q < 2) throw std::runtime_error("griesmer_k_upper(): bad parameters");
    std::uint64_t k = 0;
    while (griesmer_min_length(k + 1, d, q) <= n) ++k;
    return k;
}

bool sphere_packing_distance_optimal(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                                     std::uint64_t q) {
    if (n < 1 || k < 1 || d < 1 || q < 2)
        throw std::runtime_error("sphere_packing_distance_optimal(): bad parameters");
    // packing radius of a distance-(d+1) code
    const std::uint64_t t = d / 2;
    Int vol = 0, binom = 1, qm1pow = 1;
    for (std::uint64_t i = 0; i <= t && i <= n; ++i) {
        vol += binom * qm1pow;
        binom = binom * (n - i) / (i + 1);
        qm1pow *= q - 1;
    }
    Int qk = 1, qn = 1;
    for (std::uint64_t i = 0; i < k; ++i) qk *= q;
    for (std::uint64_t i = 0; i < n; ++i) qn *= q;
    return qk * vol > qn;
}

std::uint64_t cm_locality_bound(std::uint64_t n, std::uint64_t d, std::uint64_t q,
                                std::uint64_t r) {
    if (r < 1 || n <= r) throw std::runtime_error("cm_locality_bound(): need n > r >= 1");
    bool any = false;
    std::uint64_t best = 0;
    for (std::uint64_t t = 1; t * (r + 1) <= n; ++t) {
        const std::uint64_t residual = n - t * (r + 1);
        std::uint64_t val = t * r;
        if (residual >= d) val += griesmer_k_upper(residual, d, q);
        if (!any || val < best) best = val;
        any = true;
    }
    if (!any) throw std::runtime_error("cm_locality_bound(): no admissible t");
    return best;
}

BoundReport compute_bound_report(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q,
                                 std::uint64_t r) {
    BoundReport b;
    b.griesmer_min_length = griesmer_min_length(k, d, q);
    b.griesmer_optimal = b.griesmer_min_length <= n && griesmer_min_length(k, d + 1, q) > n;
    b.sphere_packing_distance_optimal = sphere_packing_distance_optimal(n, k, d, q);
    b.cm_upper = cm_locality_bound(n, d, q, r);
    if (k == b.cm_upper)
        b.cm_verdict = "optimal";
    else if (k + 1 == b.cm_upper)
        b.cm_verdict = "almost-optimal";
    else
        b.cm_verdict = "neither";
    return b;
}

}  // namespace codekit
