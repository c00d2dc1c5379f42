// subshift.hpp - sofic presentations of subshifts over {0,...,r-1}
//
// A presentation is a trimmed labeled graph in which every state is initial:
// the language is the set of words readable along some path.  Counting and
// enumeration go through the determinized word automaton (subset construction
// seeded with the full state set), in which paths biject with words.
//
// Shifts of finite type are built from forbidden-word lists via an
// Aho-Corasick style suffix automaton; the even shift is the standard
// two-state sofic presentation; the prime gap shift is approximated from
// below by capping the admissible gaps.

#pragma once

#include "xrf/digits.hpp"
#include "xrf/intset.hpp"
#include "xrf/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace xrf {

class Subshift {
  public:
    struct Edge {
        std::uint32_t label;
        std::uint32_t to;
    };

    static Subshift from_graph(Radix r, std::uint32_t nstates,
                               const std::vector<std::vector<Edge>>& out) {
        Subshift s(r);
        s.out_ = out;
        s.out_.resize(nstates);
        s.validate_deterministic();
        s.trim();
        s.determinize();
        return s;
    }

    static Subshift full_shift(Radix r) {
        std::vector<std::vector<Edge>> out(1);
        for (std::uint32_t d = 0; d < r.value; ++d) out[0].push_back({d, 0});
        return from_graph(r, 1, out);
    }

    static Subshift restricted_digits(Radix r, const std::vector<unsigned>& digits) {
        std::vector<std::vector<Edge>> out(1);
        for (unsigned d : digits) {
            if (d >= r.value) throw std::invalid_argument("restricted_digits: digit out of range");
            out[0].push_back({d, 0});
        }
        return from_graph(r, 1, out);
    }

    // words containing no forbidden factor; suffix automaton over the trie of
    // forbidden-word prefixes, with the completed-match state removed
    static Subshift sft_from_forbidden(Radix r, const std::vector<DigitWord>& forbidden) {
        for (const auto& w : forbidden) {
            if (w.radix.value != r.value)
                throw std::invalid_argument("sft_from_forbidden: radix mismatch");
            if (w.digits.empty())
                throw std::invalid_argument("sft_from_forbidden: empty forbidden word");
        }
        // trie over forbidden-word prefixes (read in sequence order)
        struct TrieNode {
            std::map<std::uint32_t, std::uint32_t> next;
            std::uint32_t fail = 0;
            bool terminal = false;
        };
        std::vector<TrieNode> trie(1);
        for (const auto& w : forbidden) {
            std::uint32_t cur = 0;
            for (auto d : w.digits) {
                auto it = trie[cur].next.find(d);
                if (it == trie[cur].next.end()) {
                    trie.push_back({});
                    trie[cur].next[d] = static_cast<std::uint32_t>(trie.size() - 1);
                    cur = static_cast<std::uint32_t>(trie.size() - 1);
                } else {
                    cur = it->second;
                }
            }
            trie[cur].terminal = true;
        }
        // BFS failure links; a state is dead if it or one of its suffixes is terminal
        std::vector<std::uint32_t> order;
        for (auto& [d, v] : trie[0].next) order.push_back(v);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const std::uint32_t u = order[i];
            if (trie[trie[u].fail].terminal) trie[u].terminal = true;
            for (auto& [d, v] : trie[u].next) {
                std::uint32_t f = trie[u].fail;
                while (f != 0 && trie[f].next.find(d) == trie[f].next.end()) f = trie[f].fail;
                auto it = trie[f].next.find(d);
                trie[v].fail = (it != trie[f].next.end() && it->second != v) ? it->second : 0;
                order.push_back(v);
            }
        }
        // full transition function, dead on terminal states
        const auto n = static_cast<std::uint32_t>(trie.size());
        std::vector<std::vector<Edge>> out(n);
        for (std::uint32_t u = 0; u < n; ++u) {
            if (trie[u].terminal) continue;
            for (std::uint32_t d = 0; d < r.value; ++d) {
                std::uint32_t cur = u;
                while (true) {
                    auto it = trie[cur].next.find(d);
                    if (it != trie[cur].next.end()) {
                        cur = it->second;
                        break;
                    }
                    if (cur == 0) break;
                    cur = trie[cur].fail;
                }
                if (!trie[cur].terminal) out[u].push_back({d, cur});
            }
        }
        Subshift s(r);
        s.out_ = std::move(out);
        s.trim();
        s.determinize();
        return s;
    }

    // binary sequences with an even number of 0s between consecutive 1s
    static Subshift even_shift() {
        std::vector<std::vector<Edge>> out(2);
        out[0] = {{1u, 0u}, {0u, 1u}};
        out[1] = {{0u, 0u}};
        return from_graph(Radix(2), 2, out);
    }

    // gaps between consecutive 1s restricted to primes <= gap_cap; converges
    // to the prime gap shift from below as the cap grows
    static Subshift prime_gap_shift(unsigned gap_cap) {
        if (gap_cap < 2) throw std::invalid_argument("prime_gap_shift: gap_cap >= 2");
        std::vector<bool> is_prime(gap_cap + 1, true);
        is_prime[0] = is_prime[1] = false;
        for (unsigned p = 2; p * p <= gap_cap; ++p)
            if (is_prime[p])
                for (unsigned q = p * p; q <= gap_cap; q += p) is_prime[q] = false;
        unsigned pmax = 2;
        for (unsigned p = 2; p <= gap_cap; ++p)
            if (is_prime[p]) pmax = p;
        // state g = number of 0s since the last 1; once g exceeds the largest
        // admissible prime, only an all-zero tail can follow
        const unsigned tail = pmax + 1;
        std::vector<std::vector<Edge>> out(tail + 1);
        for (unsigned g = 0; g <= pmax; ++g) {
            out[g].push_back({0u, g + 1});
            if (is_prime[g]) out[g].push_back({1u, 0u});
        }
        out[tail].push_back({0u, tail});
        return from_graph(Radix(2), tail + 1, out);
    }

    // plain-text fixture: first line "radix r", then "forbid w", "digits d...",
    // or a named key: "golden" | "even" | "primegap G" | "full"
    static Subshift from_fixture(std::istream& is) {
        std::string line;
        unsigned r = 0;
        std::vector<DigitWord> forbidden;
        std::vector<unsigned> digits;
        std::string named;
        unsigned gap_cap = 0;
        while (std::getline(is, line)) {
            std::istringstream ls(line);
            std::string key;
            if (!(ls >> key) || key[0] == '#') continue;
            if (key == "radix") {
                ls >> r;
            } else if (key == "forbid") {
                if (r < 2) throw std::invalid_argument("fixture: radix must come first");
                std::string w;
                ls >> w;
                std::vector<std::uint32_t> ds;
                for (char c : w) {
                    if (c < '0' || c > '9') throw std::invalid_argument("fixture: bad digit");
                    ds.push_back(static_cast<std::uint32_t>(c - '0'));
                }
                forbidden.emplace_back(std::move(ds), Radix(r));
            } else if (key == "digits") {
                unsigned d;
                while (ls >> d) digits.push_back(d);
            } else if (key == "primegap") {
                named = key;
                ls >> gap_cap;
            } else {
                named = key;
            }
        }
        if (named == "golden") {
            DigitWord w({1, 1}, Radix(2));
            return sft_from_forbidden(Radix(2), {w});
        }
        if (named == "even") return even_shift();
        if (named == "primegap") return prime_gap_shift(gap_cap);
        if (r < 2) throw std::invalid_argument("fixture: missing radix");
        if (named == "full") return full_shift(Radix(r));
        if (!digits.empty()) return restricted_digits(Radix(r), digits);
        return sft_from_forbidden(Radix(r), forbidden);
    }

    static Subshift from_fixture_string(const std::string& text) {
        std::istringstream is(text);
        return from_fixture(is);
    }

    Radix radix() const { return radix_; }
    bool empty() const { return det_out_.empty(); }
    std::uint32_t presentation_states() const { return static_cast<std::uint32_t>(out_.size()); }

    // determinized word automaton
    std::uint32_t det_states() const { return static_cast<std::uint32_t>(det_out_.size()); }
    std::uint32_t det_initial() const { return det_initial_; }
    const std::vector<Edge>& det_edges(std::uint32_t q) const { return det_out_[q]; }

    // number of edges q -> p in the determinized automaton
    std::vector<std::vector<std::uint64_t>> transfer_matrix() const {
        std::vector<std::vector<std::uint64_t>> m(det_states(),
                                                  std::vector<std::uint64_t>(det_states(), 0));
        for (std::uint32_t q = 0; q < det_states(); ++q)
            for (const auto& e : det_out_[q]) m[q][e.to] += 1;
        return m;
    }

    // |L_N|: exact, words with leading zeros included
    BigInt language_count(unsigned n) const {
        if (empty()) return 0;
        std::vector<BigInt> v(det_states(), 0);
        v[det_initial_] = 1;
        for (unsigned i = 0; i < n; ++i) v = step_counts(v);
        BigInt total = 0;
        for (const auto& x : v) total += x;
        return total;
    }

    std::vector<BigInt> language_counts(unsigned n_max) const {
        std::vector<BigInt> out;
        out.reserve(n_max + 1);
        std::vector<BigInt> v(det_states(), 0);
        if (!empty()) v[det_initial_] = 1;
        for (unsigned n = 0; n <= n_max; ++n) {
            BigInt total = 0;
            for (const auto& x : v) total += x;
            out.push_back(total);
            if (n < n_max && !empty()) v = step_counts(v);
        }
        return out;
    }

    struct EntropyEstimate {
        double slope;     // least-squares growth of log_r |L_N| over the top half
        double spectral;  // log_r of the transfer matrix's dominant eigenvalue
        unsigned n_max;
        bool defined;
    };

    EntropyEstimate entropy(unsigned n_max) const {
        if (n_max < 2) throw std::invalid_argument("entropy: n_max >= 2");
        EntropyEstimate est{0, 0, n_max, !empty()};
        if (empty()) return est;
        const double logr = std::log(static_cast<double>(radix_.value));
        const auto counts = language_counts(n_max);
        std::vector<std::pair<double, double>> xy;
        for (unsigned n = n_max / 2; n <= n_max; ++n) {
            if (counts[n] == 0) continue;
            xy.emplace_back(double(n), log_big(counts[n]) / logr);
        }
        est.slope = slope_least_squares(xy);
        // power iteration on the determinized transfer matrix
        const auto m = transfer_matrix();
        std::vector<double> v(det_states(), 1.0), w(det_states());
        double lambda = 1.0;
        for (int it = 0; it < 500; ++it) {
            double norm = 0;
            for (std::uint32_t i = 0; i < det_states(); ++i) {
                double acc = 0;
                for (std::uint32_t j = 0; j < det_states(); ++j)
                    acc += static_cast<double>(m[i][j]) * v[j];
                w[i] = acc;
                norm = std::max(norm, acc);
            }
            if (norm == 0) break;
            lambda = norm;
            for (auto& x : w) x /= norm;
            v = w;
        }
        est.spectral = std::log(lambda) / logr;
        return est;
    }

    // A_Sigma cap [0, bound): word values w_0 + w_1 r + ... read along paths
    IntSet embed(std::uint64_t bound) const {
        std::vector<std::uint64_t> out{0};
        if (!empty() && bound > 0) {
            using u128 = unsigned __int128;
            auto rec = [&](auto&& self, std::uint32_t q, std::uint64_t v, u128 place) -> void {
                if (place >= bound) return;
                for (const auto& e : det_out_[q]) {
                    const u128 w = v + place * e.label;
                    if (w < bound) {
                        out.push_back(static_cast<std::uint64_t>(w));
                        self(self, e.to, static_cast<std::uint64_t>(w), place * radix_.value);
                    }
                }
            };
            rec(rec, det_initial_, 0, 1);
        }
        return IntSet(std::move(out), bound);
    }

    // big-endian values of all length-n words (for the [0,1] approximations)
    std::vector<BigInt> words_big_endian(unsigned n) const {
        std::vector<BigInt> out;
        if (empty()) return out;
        struct Frame {
            std::uint32_t q;
            BigInt v;
            unsigned depth;
        };
        std::vector<Frame> stack{{det_initial_, BigInt(0), 0}};
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            if (f.depth == n) {
                out.push_back(std::move(f.v));
                continue;
            }
            for (const auto& e : det_out_[f.q])
                stack.push_back({e.to, f.v * radix_.value + e.label, f.depth + 1});
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    explicit Subshift(Radix r) : radix_(r) {}

    void validate_deterministic() const {
        for (const auto& edges : out_) {
            std::vector<bool> seen(radix_.value, false);
            for (const auto& e : edges) {
                if (e.label >= radix_.value || e.to >= out_.size())
                    throw std::invalid_argument("Subshift: bad edge");
                if (seen[e.label])
                    throw std::invalid_argument("Subshift: nondeterministic presentation");
                seen[e.label] = true;
            }
        }
    }

    // drop states with no outgoing edge until none remain (every word of the
    // language must extend to an infinite word)
    void trim() {
        const std::size_t n = out_.size();
        std::vector<bool> alive(n, true);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t q = 0; q < n; ++q) {
                if (!alive[q]) continue;
                bool has_edge = false;
                for (const auto& e : out_[q])
                    if (alive[e.to]) has_edge = true;
                if (!has_edge) {
                    alive[q] = false;
                    changed = true;
                }
            }
        }
        std::vector<std::uint32_t> remap(n, UINT32_MAX);
        std::uint32_t next = 0;
        for (std::size_t q = 0; q < n; ++q)
            if (alive[q]) remap[q] = next++;
        std::vector<std::vector<Edge>> out2(next);
        for (std::size_t q = 0; q < n; ++q) {
            if (!alive[q]) continue;
            for (const auto& e : out_[q])
                if (alive[e.to]) out2[remap[q]].push_back({e.label, remap[e.to]});
        }
        out_ = std::move(out2);
    }

    // subset construction seeded with all presentation states
    void determinize() {
        det_out_.clear();
        det_initial_ = 0;
        if (out_.empty()) return;
        std::vector<std::uint32_t> all(out_.size());
        for (std::uint32_t i = 0; i < out_.size(); ++i) all[i] = i;
        std::map<std::vector<std::uint32_t>, std::uint32_t> index;
        std::vector<std::vector<std::uint32_t>> subsets{all};
        index[all] = 0;
        det_out_.emplace_back();
        for (std::uint32_t q = 0; q < subsets.size(); ++q) {
            for (std::uint32_t d = 0; d < radix_.value; ++d) {
                std::vector<std::uint32_t> nxt;
                for (std::uint32_t s : subsets[q])
                    for (const auto& e : out_[s])
                        if (e.label == d) nxt.push_back(e.to);
                std::sort(nxt.begin(), nxt.end());
                nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
                if (nxt.empty()) continue;
                auto it = index.find(nxt);
                std::uint32_t id;
                if (it == index.end()) {
                    id = static_cast<std::uint32_t>(subsets.size());
                    if (id > 200000) throw std::runtime_error("Subshift: determinization too large");
                    index[nxt] = id;
                    subsets.push_back(nxt);
                    det_out_.emplace_back();
                } else {
                    id = it->second;
                }
                det_out_[q].push_back({d, id});
            }
        }
    }

    std::vector<BigInt> step_counts(const std::vector<BigInt>& v) const {
        std::vector<BigInt> w(det_states(), 0);
        for (std::uint32_t q = 0; q < det_states(); ++q) {
            if (v[q] == 0) continue;
            for (const auto& e : det_out_[q]) w[e.to] += v[q];
        }
        return w;
    }

    Radix radix_;
    std::vector<std::vector<Edge>> out_;  // presentation
    std::vector<std::vector<Edge>> det_out_;
    std::uint32_t det_initial_ = 0;
};

}  // namespace xrf
