// cover.hpp - optimal 1-D covers at a minimum scale
//
// Discrete Hausdorff content of a finite point set on the line: cover the
// points by intervals of length >= rho minimizing sum(length^gamma).  An
// optimal cover uses intervals spanning consecutive runs of input points
// (shrinking an interval onto the points it covers never increases its cost),
// so a quadratic DP over the sorted order is exact.  Validated against
// exhaustive partition search in the tests.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xrf {

struct CoverDP {
    long double value = 0;
    // consecutive index runs [first, last] covered by one interval each
    std::vector<std::pair<std::size_t, std::size_t>> groups;
};

// pts sorted ascending; Scalar is an exact type with subtraction and
// conversion to long double (Rational, integers).
template <class Scalar>
CoverDP cover_dp(const std::vector<Scalar>& pts, const Scalar& rho, double gamma) {
    const std::size_t n = pts.size();
    CoverDP out;
    if (n == 0) return out;
    if (!(gamma > 0))
        throw std::invalid_argument("cover_dp: gamma must be positive");
    const long double rho_ld = static_cast<long double>(rho);
    std::vector<long double> cost(n + 1, 0.0L);
    std::vector<std::size_t> next(n, n);
    for (std::size_t i = n; i-- > 0;) {
        long double best = -1;
        std::size_t best_j = i;
        for (std::size_t j = i; j < n; ++j) {
            const Scalar span = pts[j] - pts[i];
            long double len = static_cast<long double>(span);
            if (len < rho_ld) len = rho_ld;
            const long double c = std::pow(len, static_cast<long double>(gamma)) + cost[j + 1];
            if (best < 0 || c < best) {
                best = c;
                best_j = j;
            }
        }
        cost[i] = best;
        next[i] = best_j;
    }
    out.value = cost[0];
    for (std::size_t i = 0; i < n;) {
        out.groups.emplace_back(i, next[i]);
        i = next[i] + 1;
    }
    return out;
}

// Min-cost cover by r-adic intervals, computed by recursion over digit
// blocks; points are integers in [0, r^levels).  This is the tree min-cut
// view of the same content and stays within a factor (2r)^gamma of the
// unrestricted optimum.  O(n * levels), usable when the DP is too large.
inline long double radic_content(const std::vector<std::uint64_t>& pts, unsigned r,
                                 unsigned levels, double gamma) {
    struct Rec {
        const std::vector<std::uint64_t>& p;
        unsigned r;
        double gamma;
        long double run(std::size_t lo, std::size_t hi, std::uint64_t base, unsigned k) const {
            if (lo >= hi) return 0.0L;
            const long double own =
                std::pow(static_cast<long double>(std::pow(static_cast<long double>(r),
                                                           static_cast<long double>(k))),
                         static_cast<long double>(gamma));
            if (k == 0) return own;  // single lattice cell
            std::uint64_t block = 1;
            for (unsigned i = 0; i + 1 < k; ++i) block *= r;
            long double split = 0.0L;
            std::size_t i = lo;
            while (i < hi) {
                const std::uint64_t child = (p[i] - base) / block;
                std::size_t j = i;
                while (j < hi && (p[j] - base) / block == child) ++j;
                split += run(i, j, base + child * block, k - 1);
                i = j;
                if (split >= own) break;  // can't beat covering the block whole
            }
            return split < own ? split : own;
        }
    };
    if (pts.empty()) return 0.0L;
    return Rec{pts, r, gamma}.run(0, pts.size(), 0, levels);
}

}  // namespace xrf
