// tree.hpp - leveled rooted trees: cuts, base-r Hausdorff content, fertility,
// thinning to regular subtrees, and equal-split flow measures
//
// Content is the cheapest cut under node costs base^(-height*gamma), found by
// the bottom-up DP cost(Q) = min(own, sum over children).  Costs are
// irrational for fractional gamma, so all content values are directed-rounding
// enclosures (Ival); every inequality that gates a pass/fail decision compares
// conservative endpoints, and exact integer power comparisons are used for
// fertility thresholds of the form base^gamma.

#pragma once

#include "xrf/interval.hpp"
#include "xrf/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace xrf {

class Tree {
  public:
    static constexpr std::int32_t no_parent = -1;

    // root first; parents must precede children
    std::uint32_t add_node(std::int32_t parent, std::uint64_t payload = 0) {
        if (nodes_.size() > max_nodes) throw std::length_error("Tree: node cap exceeded");
        Node n;
        n.parent = parent;
        n.payload = payload;
        if (parent == no_parent) {
            if (!nodes_.empty()) throw std::invalid_argument("Tree: root must be the only orphan");
            n.level = 0;
        } else {
            if (parent < 0 || static_cast<std::size_t>(parent) >= nodes_.size())
                throw std::invalid_argument("Tree: parent must precede child");
            n.level = nodes_[parent].level + 1;
        }
        nodes_.push_back(n);
        finalized_ = false;
        return static_cast<std::uint32_t>(nodes_.size() - 1);
    }

    // builds children lists and checks the leveled-tree invariants
    void finalize() {
        if (nodes_.empty()) throw std::invalid_argument("Tree: empty");
        children_.assign(nodes_.size(), {});
        height_ = 0;
        for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].parent != no_parent)
                children_[nodes_[i].parent].push_back(i);
            height_ = std::max(height_, nodes_[i].level);
        }
        for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
            if (children_[i].empty() && nodes_[i].level != height_)
                throw std::invalid_argument("Tree: interior node without children");
        }
        finalized_ = true;
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(nodes_.size()); }
    unsigned height() const { return height_; }
    unsigned level(std::uint32_t q) const { return nodes_[q].level; }
    std::int32_t parent(std::uint32_t q) const { return nodes_[q].parent; }
    std::uint64_t payload(std::uint32_t q) const { return nodes_[q].payload; }
    const std::vector<std::uint32_t>& children(std::uint32_t q) const { return children_[q]; }
    bool is_leaf(std::uint32_t q) const { return nodes_[q].level == height_; }

    std::vector<std::uint32_t> leaves() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < size(); ++i)
            if (is_leaf(i)) out.push_back(i);
        return out;
    }

    // "id, level, parent_id, payload" per line
    void dump(std::ostream& os) const {
        for (std::uint32_t i = 0; i < size(); ++i)
            os << i << ", " << nodes_[i].level << ", " << nodes_[i].parent << ", "
               << nodes_[i].payload << "\n";
    }

    static Tree parse(std::istream& is) {
        Tree t;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ls(line);
            std::int64_t id, level, parent;
            std::uint64_t payload;
            if (!(ls >> id >> level >> parent >> payload))
                throw std::invalid_argument("Tree::parse: bad line");
            const auto got = t.add_node(static_cast<std::int32_t>(parent), payload);
            if (got != id || t.nodes_.back().level != level)
                throw std::invalid_argument("Tree::parse: inconsistent dump");
        }
        t.finalize();
        return t;
    }

  private:
    struct Node {
        std::int32_t parent;
        std::uint32_t level;
        std::uint64_t payload;
    };
    static constexpr std::size_t max_nodes = 1u << 20;
    std::vector<Node> nodes_;
    std::vector<std::vector<std::uint32_t>> children_;
    unsigned height_ = 0;
    bool finalized_ = false;
};

// a cut must meet {leaf} union ancestors(leaf) for every leaf
inline bool check_cut(const Tree& t, const std::vector<std::uint32_t>& cut) {
    std::vector<bool> in_cut(t.size(), false);
    for (auto q : cut) in_cut[q] = true;
    for (std::uint32_t q = 0; q < t.size(); ++q) {
        if (!t.is_leaf(q)) continue;
        std::int32_t cur = static_cast<std::int32_t>(q);
        bool hit = false;
        while (cur != Tree::no_parent) {
            if (in_cut[cur]) {
                hit = true;
                break;
            }
            cur = t.parent(static_cast<std::uint32_t>(cur));
        }
        if (!hit) return false;
    }
    return true;
}

struct ContentResult {
    Ival value;                      // H_base^gamma of the whole tree
    std::vector<std::uint32_t> cut;  // witness achieving it
    std::vector<Ival> subtree_abs;   // per node: min cut cost of its subtree at absolute heights
};

inline ContentResult content(const Tree& t, std::uint64_t base, const Rational& gamma,
                             mpfr_prec_t prec = 192) {
    if (gamma <= 0) throw std::invalid_argument("content: gamma > 0 required");
    std::vector<Ival> abs_cost(t.size(), Ival(prec));
    std::vector<bool> take_own(t.size(), false);
    std::vector<Ival> own_by_level;
    for (unsigned l = 0; l <= t.height(); ++l)
        own_by_level.push_back(Ival::pow_of(base, -gamma * static_cast<int>(l), prec));
    // ids are topologically ordered (parents first), so reverse order is bottom-up
    for (std::uint32_t i = t.size(); i-- > 0;) {
        const Ival& own = own_by_level[t.level(i)];
        if (t.is_leaf(i)) {
            abs_cost[i] = own;
            take_own[i] = true;
            continue;
        }
        Ival sum(prec);
        for (auto c : t.children(i)) sum = sum + abs_cost[c];
        // prefer the single node unless the children are definitely cheaper
        take_own[i] = !sum.definitely_lt(own);
        abs_cost[i] = Ival::min(own, sum);
    }
    ContentResult res{abs_cost[0], {}, std::move(abs_cost)};
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        const std::uint32_t q = stack.back();
        stack.pop_back();
        if (take_own[q]) {
            res.cut.push_back(q);
        } else {
            for (auto c : t.children(q)) stack.push_back(c);
        }
    }
    std::sort(res.cut.begin(), res.cut.end());
    return res;
}

// |C(Q)| >= base^expo, decided exactly with integer powers
inline bool is_fertile(const Tree& t, std::uint32_t q, std::uint64_t base, const Rational& expo) {
    return count_at_least_pow(BigInt(t.children(q).size()), base, expo);
}

inline unsigned fertile_ancestor_count(const Tree& t, std::uint32_t q, std::uint64_t base,
                                       const Rational& expo) {
    unsigned count = 0;
    std::int32_t cur = t.parent(q);
    while (cur != Tree::no_parent) {
        if (is_fertile(t, static_cast<std::uint32_t>(cur), base, expo)) ++count;
        cur = t.parent(static_cast<std::uint32_t>(cur));
    }
    return count;
}

// |F_c(Q)| >= omega * |ancestry(Q)|, exact
inline bool has_fertile_ancestry(const Tree& t, std::uint32_t q, std::uint64_t base,
                                 const Rational& expo, const Rational& omega) {
    const unsigned f = fertile_ancestor_count(t, q, base, expo);
    const unsigned n = t.level(q);
    return Rational(f) >= omega * Rational(n);
}

struct ThinParams {
    std::uint64_t base;
    Rational g3, g4, g5;
};

struct Thinned {
    Tree tree;
    std::vector<std::uint32_t> orig;  // thinned node id -> source node id
};

namespace detail {
// count > base^expo, exact:  count^q > base^p
inline bool exceeds_pow(const BigInt& count, std::uint64_t base, const Rational& expo) {
    const BigInt p = boost::multiprecision::numerator(expo);
    const BigInt q = boost::multiprecision::denominator(expo);
    return ipow(count, q.convert_to<unsigned>()) >
           ipow(BigInt(base), p.convert_to<unsigned>());
}

inline void check_child_cap(const Tree& t, std::uint64_t base, const Rational& g5) {
    for (std::uint32_t q = 0; q < t.size(); ++q)
        if (exceeds_pow(BigInt(t.children(q).size()), base, g5))
            throw std::invalid_argument("thin: node " + std::to_string(q) +
                                        " exceeds the base^gamma5 child cap");
}
}  // namespace detail

// Subtree in which every node keeps many fertile ancestors: at each step,
// either keep all children whose induced content is within base^-A of the
// parent's (when there are at least base^g3 of them), or descend into the
// single child with content at least base^B times the parent's.  Case one is
// preferred when both hold.  case1_cap limits how many children case one
// keeps (child-subset selection preserves fertile ancestry).
inline Thinned thin(const Tree& t, const ThinParams& p, mpfr_prec_t prec = 192,
                    std::optional<std::uint64_t> case1_cap = std::nullopt) {
    if (!(p.g3 < p.g4 && p.g4 < p.g5)) throw std::invalid_argument("thin: need g3 < g4 < g5");
    const Ival log2 = Ival::exact_ui(2, prec).log_base(p.base);
    const Ival B = Ival::from_rational(p.g4 - p.g3, prec) - log2;
    if (!B.definitely_gt(Ival::exact_ui(0, prec)))
        throw std::invalid_argument("thin: B = g4 - g3 - log_base(2) must be positive");
    detail::check_child_cap(t, p.base, p.g5);

    const ContentResult cr = content(t, p.base, p.g4, prec);
    // thresholds relative to the absolute-cost DP values:
    //   case I:  abs(c) >= abs(q) * base^-(A + g4)
    //   case II: abs(c) >= abs(q) * base^(B - g4)
    const Ival fac1 = Ival::pow_of(p.base, -(p.g5 - p.g4) - p.g4, prec) / Ival::exact_ui(2, prec);
    const Ival fac2 =
        Ival::pow_of(p.base, (p.g4 - p.g3) - p.g4, prec) / Ival::exact_ui(2, prec);
    const BigInt need1 = ceil_pow(p.base, p.g3);

    Tree out;
    std::vector<std::uint32_t> orig;
    struct Frame {
        std::uint32_t src;
        std::int32_t dst_parent;
    };
    std::vector<Frame> stack{{0u, Tree::no_parent}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const std::uint32_t dst = out.add_node(f.dst_parent, t.payload(f.src));
        orig.push_back(f.src);
        if (t.is_leaf(f.src)) continue;

        std::vector<std::uint32_t> kids = t.children(f.src);
        std::stable_sort(kids.begin(), kids.end(), [&](std::uint32_t a, std::uint32_t b) {
            const double ma = cr.subtree_abs[a].mid(), mb = cr.subtree_abs[b].mid();
            if (ma != mb) return ma > mb;
            if (t.payload(a) != t.payload(b)) return t.payload(a) < t.payload(b);
            return a < b;
        });
        const Ival thr1 = cr.subtree_abs[f.src] * fac1;
        std::vector<std::uint32_t> quals;
        for (auto c : kids)
            if (cr.subtree_abs[c].possibly_ge(thr1)) quals.push_back(c);
        std::vector<std::uint32_t> keep;
        if (BigInt(quals.size()) >= need1) {
            keep = quals;
            if (case1_cap && keep.size() > *case1_cap) keep.resize(*case1_cap);
        } else {
            // case II: the largest-content child; the dichotomy guarantees it
            // clears base^B, so a definite failure means broken preconditions
            const std::uint32_t best = kids.front();
            const Ival thr2 = cr.subtree_abs[f.src] * fac2;
            if (cr.subtree_abs[best].definitely_lt(thr2))
                throw std::runtime_error("thin: dichotomy failed at node " +
                                         std::to_string(f.src));
            keep = {best};
        }
        for (auto it = keep.rbegin(); it != keep.rend(); ++it)
            stack.push_back({*it, static_cast<std::int32_t>(dst)});
    }
    out.finalize();
    return {std::move(out), std::move(orig)};
}

struct ThinCheck {
    bool ok = true;
    std::optional<std::uint32_t> failing_node;
};

// eq-style node check on the thinned tree: for every node Q,
// |F_{base^g3}(Q)| >= (|ancestry| * B + log_base H) / (g5 - g3),
// with H the content of the source tree; the comparison passes only when it
// holds with conservative rounding.
inline ThinCheck verify_thin(const Tree& thinned, const Ival& source_content,
                             const ThinParams& p, mpfr_prec_t prec = 192) {
    const Ival log2 = Ival::exact_ui(2, prec).log_base(p.base);
    const Ival B = Ival::from_rational(p.g4 - p.g3, prec) - log2;
    if (!B.definitely_gt(Ival::exact_ui(0, prec)))
        throw std::invalid_argument("verify_thin: B must be positive");
    const Ival den = Ival::from_rational(p.g5 - p.g3, prec);  // A + B, the logs cancel
    const Ival logH = source_content.log_base(p.base);
    ThinCheck res;
    for (std::uint32_t q = 0; q < thinned.size(); ++q) {
        const unsigned n = thinned.level(q);
        const unsigned f = fertile_ancestor_count(thinned, q, p.base, p.g3);
        // rhs may be negative; compare via f*den >= n*B + logH to stay in
        // non-negative interval ops on the left
        const Ival lhs = Ival::exact_ui(f, prec) * den;
        const Ival rhs = Ival::exact_ui(n, prec) * B + logH;
        if (!lhs.definitely_ge(rhs)) {
            res.ok = false;
            res.failing_node = q;
            return res;
        }
    }
    return res;
}

struct RegularSubtree {
    Thinned thinned;
    unsigned n0;
    Ival source_content;
};

// Thinning with a guaranteed fertile-ancestry height: hypotheses are the
// gamma chain, B/(A+B) > 1 - eps, and content >= V; n0 is the smallest N
// making (N*B + log V) / (N*(A+B)) > 1 - eps.
inline RegularSubtree regular_subtree(const Tree& t, const ThinParams& p, const Rational& eps,
                                      const Rational& V, mpfr_prec_t prec = 192,
                                      std::optional<std::uint64_t> case1_cap = std::nullopt) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("regular_subtree: eps in (0,1)");
    if (!(p.g3 < p.g4 && p.g4 < p.g5 && p.g5 < p.g4 + eps * (p.g4 - p.g3)))
        throw std::invalid_argument(
            "regular_subtree: need g3 < g4 < g5 < g4 + eps*(g4 - g3)");
    if (V <= 0) throw std::invalid_argument("regular_subtree: V > 0 required");
    const Ival log2 = Ival::exact_ui(2, prec).log_base(p.base);
    const Ival B = Ival::from_rational(p.g4 - p.g3, prec) - log2;
    const Ival den = Ival::from_rational(p.g5 - p.g3, prec);
    const Ival gap = B - Ival::from_rational((1 - eps) * (p.g5 - p.g3), prec);
    if (!gap.definitely_gt(Ival::exact_ui(0, prec)))
        throw std::invalid_argument(
            "regular_subtree: base too small, B/(A+B) > 1-eps fails");

    const ContentResult cr = content(t, p.base, p.g4, prec);
    if (!cr.value.definitely_ge(Ival::from_rational(V, prec)))
        throw std::invalid_argument("regular_subtree: content below V");

    unsigned n0 = 1;
    if (V < 1) {
        // smallest N with N*gap > -log V
        const Ival neg_logV =
            Ival::exact_ui(0, prec) - Ival::from_rational(V, prec).log_base(p.base);
        const Ival q = neg_logV / gap;
        const double hi = q.hi_d();
        n0 = hi <= 0 ? 1 : static_cast<unsigned>(std::floor(hi)) + 1;
    }
    Thinned th = thin(t, p, prec, case1_cap);
    return {std::move(th), n0, cr.value};
}

// equal-split flow: mass 1 at the root, divided evenly among children
inline std::vector<Rational> flow_measure(const Tree& t) {
    std::vector<Rational> mass(t.size());
    mass[0] = 1;
    for (std::uint32_t q = 0; q < t.size(); ++q) {
        const auto& ch = t.children(q);
        if (ch.empty()) continue;
        const Rational share = mass[q] / Rational(ch.size());
        for (auto c : ch) mass[c] = share;
    }
    return mass;
}

inline std::vector<std::pair<std::uint32_t, Rational>> leaf_measure(const Tree& t) {
    const auto mass = flow_measure(t);
    std::vector<std::pair<std::uint32_t, Rational>> out;
    for (std::uint32_t q = 0; q < t.size(); ++q)
        if (t.is_leaf(q)) out.emplace_back(q, mass[q]);
    return out;
}

}  // namespace xrf
