// pointset.hpp - finite exact-rational point sets in [0,1] and [0,1]^2

#pragma once

#include "xrf/intset.hpp"
#include "xrf/numeric.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace xrf {

struct PointSet1D {
    std::vector<Rational> pts;  // sorted, duplicate-free

    PointSet1D() = default;
    explicit PointSet1D(std::vector<Rational> v) : pts(std::move(v)) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }
    std::size_t size() const { return pts.size(); }
    bool empty() const { return pts.empty(); }
    Rational diameter() const { return pts.empty() ? Rational(0) : pts.back() - pts.front(); }
};

struct PointSet2D {
    std::vector<std::pair<Rational, Rational>> pts;  // lexicographically sorted, duplicate-free

    PointSet2D() = default;
    explicit PointSet2D(std::vector<std::pair<Rational, Rational>> v) : pts(std::move(v)) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }
    std::size_t size() const { return pts.size(); }
    bool empty() const { return pts.empty(); }
};

inline PointSet2D product(const PointSet1D& x, const PointSet1D& y) {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(x.size() * y.size());
    for (const auto& a : x.pts)
        for (const auto& b : y.pts) out.emplace_back(a, b);
    return PointSet2D(std::move(out));
}

// {a / n : a in A, a < n} as exact rationals
inline PointSet1D rescale(const IntSet& A, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("rescale: n must be positive");
    if (n > A.bound()) throw std::invalid_argument("rescale: n exceeds the set's bound");
    std::vector<Rational> out;
    for (std::uint64_t a : A.elements()) {
        if (a >= n) break;
        out.emplace_back(Rational(BigInt(a), BigInt(n)));
    }
    return PointSet1D(std::move(out));
}

// CSV of exact fractions "p/q", one point per line (two columns for 2-D)
inline void serialize(std::ostream& os, const PointSet1D& p) {
    for (const auto& x : p.pts)
        os << boost::multiprecision::numerator(x) << "/" << boost::multiprecision::denominator(x)
           << "\n";
}

inline void serialize(std::ostream& os, const PointSet2D& p) {
    for (const auto& [x, y] : p.pts)
        os << boost::multiprecision::numerator(x) << "/" << boost::multiprecision::denominator(x)
           << "," << boost::multiprecision::numerator(y) << "/"
           << boost::multiprecision::denominator(y) << "\n";
}

inline PointSet1D deserialize_points(std::istream& is) {
    std::vector<Rational> pts;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto slash = line.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("points: expected p/q");
        pts.emplace_back(BigInt(line.substr(0, slash)), BigInt(line.substr(slash + 1)));
    }
    return PointSet1D(std::move(pts));
}

}  // namespace xrf
