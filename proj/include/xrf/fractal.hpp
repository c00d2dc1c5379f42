// fractal.hpp - discrete fractal geometry on finite rational point sets
//
// Metric entropy (exact in 1-D: left-to-right greedy selection is optimal on
// the line), discrete Hausdorff content via the cover DP, (rho,gamma)_c-set
// verification over a structured ball family, Hausdorff distance, and the
// lattice approximations X_n of a subshift viewed inside [0,1].
//
// All point coordinates are exact rationals; the gamma-th powers inside
// content values are the single inexact step and run in long double.

#pragma once

#include "xrf/cover.hpp"
#include "xrf/pointset.hpp"
#include "xrf/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace xrf {

// maximum cardinality of a rho-separated subset (separation is inclusive:
// |x-y| >= rho counts as separated); greedy left-to-right is optimal in 1-D
inline std::uint64_t metric_entropy(const PointSet1D& p, const Rational& rho) {
    if (rho <= 0) throw std::invalid_argument("metric_entropy: rho > 0 required");
    std::uint64_t count = 0;
    const Rational* last = nullptr;
    for (const auto& x : p.pts) {
        if (last == nullptr || x - *last >= rho) {
            ++count;
            last = &x;
        }
    }
    return count;
}

struct Entropy2D {
    std::uint64_t count;
    bool lower_bound;  // greedy maximal packing; exact only in 1-D
};

inline Entropy2D metric_entropy(const PointSet2D& p, const Rational& rho) {
    if (rho <= 0) throw std::invalid_argument("metric_entropy: rho > 0 required");
    const Rational rho2 = rho * rho;
    std::vector<std::pair<Rational, Rational>> kept;
    for (const auto& q : p.pts) {
        bool ok = true;
        for (const auto& k : kept) {
            const Rational dx = q.first - k.first, dy = q.second - k.second;
            if (dx * dx + dy * dy < rho2) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(q);
    }
    return {kept.size(), true};
}

struct CoverInterval {
    Rational left;
    Rational length;  // >= rho
};

struct CoverSolution {
    double value = 0;
    std::vector<CoverInterval> intervals;
};

// H^gamma_{>= rho}: exact optimum over interval covers (DP over sorted points)
inline CoverSolution content_1d(const PointSet1D& p, const Rational& rho, double gamma) {
    if (rho <= 0) throw std::invalid_argument("content_1d: rho > 0 required");
    if (!(gamma > 0) || gamma > 1) throw std::invalid_argument("content_1d: gamma in (0,1]");
    CoverSolution sol;
    if (p.empty()) return sol;
    const CoverDP dp = cover_dp(p.pts, Rational(rho), gamma);
    sol.value = static_cast<double>(dp.value);
    for (auto [i, j] : dp.groups) {
        Rational len = p.pts[j] - p.pts[i];
        if (len < rho) len = rho;
        sol.intervals.push_back({p.pts[i], len});
    }
    return sol;
}

struct BallWitness {
    Rational center_x;
    Rational center_y;  // zero for 1-D sets
    Rational diameter;
    std::uint64_t inside = 0;
    double allowance = 0;  // c * (delta/rho)^gamma
};

struct RhoGammaCResult {
    bool ok = true;
    std::optional<BallWitness> worst;  // tightest ball tested
};

namespace detail {
template <class PS, class CountFn, class CenterFn>
RhoGammaCResult ball_condition(const PS& p, const Rational& rho, double gamma, double c,
                               const Rational& diam, CountFn count_within, CenterFn center_of) {
    RhoGammaCResult res;
    double worst_margin = -1;
    Rational delta = rho;
    while (true) {
        for (std::size_t i = 0; i < p.pts.size(); ++i) {
            const std::uint64_t cnt = count_within(i, delta);
            const double allowance =
                c * std::pow(static_cast<double>(Rational(delta / rho)), gamma);
            const double margin = static_cast<double>(cnt) / allowance;
            if (margin > worst_margin) {
                worst_margin = margin;
                BallWitness w;
                auto [cx, cy] = center_of(i);
                w.center_x = cx;
                w.center_y = cy;
                w.diameter = delta;
                w.inside = cnt;
                w.allowance = allowance;
                res.worst = w;
            }
            if (static_cast<double>(cnt) > allowance) res.ok = false;
        }
        if (delta > diam) break;
        delta *= 2;
    }
    return res;
}
}  // namespace detail

// rho-separation checked exactly; the ball condition |X cap B| <= c (d/rho)^g
// is certified over balls centered at input points with dyadic diameters
// d = 2^k rho, which covers arbitrary balls up to a factor 2^gamma folded
// into c.  The worst (tightest) witness ball is reported.
inline RhoGammaCResult is_rho_gamma_c_set(const PointSet1D& p, const Rational& rho, double gamma,
                                          double c) {
    if (rho <= 0 || !(gamma > 0) || !(c > 0))
        throw std::invalid_argument("is_rho_gamma_c_set: positive parameters required");
    for (std::size_t i = 1; i < p.pts.size(); ++i)
        if (p.pts[i] - p.pts[i - 1] < rho) return {false, std::nullopt};
    auto count_within = [&](std::size_t i, const Rational& delta) {
        // closed ball of diameter delta centered at pts[i]
        const Rational r2 = delta / 2;
        const auto lo = std::lower_bound(p.pts.begin(), p.pts.end(), p.pts[i] - r2);
        const auto hi = std::upper_bound(p.pts.begin(), p.pts.end(), p.pts[i] + r2);
        return static_cast<std::uint64_t>(hi - lo);
    };
    auto center_of = [&](std::size_t i) { return std::pair<Rational, Rational>{p.pts[i], 0}; };
    return detail::ball_condition(p, rho, gamma, c, p.diameter(), count_within, center_of);
}

inline RhoGammaCResult is_rho_gamma_c_set(const PointSet2D& p, const Rational& rho, double gamma,
                                          double c) {
    if (rho <= 0 || !(gamma > 0) || !(c > 0))
        throw std::invalid_argument("is_rho_gamma_c_set: positive parameters required");
    const Rational rho2 = rho * rho;
    for (std::size_t i = 0; i < p.pts.size(); ++i)
        for (std::size_t j = i + 1; j < p.pts.size(); ++j) {
            const Rational dx = p.pts[i].first - p.pts[j].first;
            const Rational dy = p.pts[i].second - p.pts[j].second;
            if (dx * dx + dy * dy < rho2) return {false, std::nullopt};
        }
    Rational diam = 0;
    for (const auto& a : p.pts)
        for (const auto& b : p.pts) {
            const Rational dx = a.first - b.first, dy = a.second - b.second;
            const Rational d2 = dx * dx + dy * dy;
            if (d2 > diam) diam = d2;
        }
    // compare squared distances against (delta/2)^2
    auto count_within = [&](std::size_t i, const Rational& delta) {
        const Rational r2 = delta * delta / 4;
        std::uint64_t cnt = 0;
        for (const auto& q : p.pts) {
            const Rational dx = q.first - p.pts[i].first, dy = q.second - p.pts[i].second;
            if (dx * dx + dy * dy <= r2) ++cnt;
        }
        return cnt;
    };
    // diam here is squared; a diameter bound suffices for the dyadic ladder
    Rational diam_bound = 1;
    while (diam_bound * diam_bound < diam) diam_bound *= 2;
    auto center_of = [&](std::size_t i) {
        return std::pair<Rational, Rational>{p.pts[i].first, p.pts[i].second};
    };
    return detail::ball_condition(p, rho, gamma, c, diam_bound, count_within, center_of);
}

// exact max-min distance between two non-empty 1-D sets
inline Rational hausdorff_distance(const PointSet1D& p, const PointSet1D& q) {
    if (p.empty() || q.empty())
        throw std::invalid_argument("hausdorff_distance: non-empty sets required");
    auto one_sided = [](const PointSet1D& a, const PointSet1D& b) {
        Rational worst = 0;
        for (const auto& x : a.pts) {
            auto it = std::lower_bound(b.pts.begin(), b.pts.end(), x);
            Rational best = -1;
            if (it != b.pts.end()) best = *it - x;
            if (it != b.pts.begin()) {
                const Rational d = x - *(it - 1);
                if (best < 0 || d < best) best = d;
            }
            if (best > worst) worst = best;
        }
        return worst;
    };
    return std::max(one_sided(p, q), one_sided(q, p));
}

// X_n: length-n words of the subshift read as base-r expansions of [0,1]
inline PointSet1D approximate(const Subshift& sigma, unsigned n) {
    const BigInt den = ipow(BigInt(sigma.radix().value), n);
    std::vector<Rational> pts;
    for (const auto& v : sigma.words_big_endian(n)) pts.emplace_back(v, den);
    return PointSet1D(std::move(pts));
}

}  // namespace xrf
