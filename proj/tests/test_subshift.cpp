#include "xrf/subshift.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace xrf;

namespace {

// brute force: all words of length n over {0..r-1} with no forbidden factor
std::uint64_t count_factor_free(unsigned r, unsigned n,
                                const std::vector<std::vector<std::uint32_t>>& forbidden) {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> w;
    std::function<void()> rec = [&]() {
        if (w.size() == n) {
            ++count;
            return;
        }
        for (std::uint32_t d = 0; d < r; ++d) {
            w.push_back(d);
            bool ok = true;
            for (const auto& f : forbidden) {
                if (w.size() < f.size()) continue;
                if (std::equal(f.begin(), f.end(), w.end() - f.size())) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec();
            w.pop_back();
        }
    };
    rec();
    return count;
}

Subshift golden() { return Subshift::sft_from_forbidden(Radix(2), {DigitWord({1, 1}, Radix(2))}); }

}  // namespace

TEST_CASE("golden mean counts are Fibonacci") {
    const auto g = golden();
    CHECK(g.language_count(1) == 2);
    CHECK(g.language_count(2) == 3);
    CHECK(g.language_count(3) == 5);
    // oracle: brute-force enumeration of binary words avoiding factor 11
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(g.language_count(n) == count_factor_free(2, n, {{1, 1}}));
}

TEST_CASE("matrix counting equals brute force on fixture subshifts") {
    struct Fixture {
        Subshift s;
        unsigned r;
        std::vector<std::vector<std::uint32_t>> forbidden;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({Subshift::full_shift(Radix(2)), 2, {}});
    fixtures.push_back({Subshift::sft_from_forbidden(
                            Radix(3), {DigitWord({0, 1}, Radix(3)), DigitWord({2, 2, 2}, Radix(3))}),
                        3,
                        {{0, 1}, {2, 2, 2}}});
    fixtures.push_back(
        {Subshift::sft_from_forbidden(Radix(2), {DigitWord({1, 0, 1}, Radix(2))}), 2, {{1, 0, 1}}});
    for (auto& f : fixtures)
        for (unsigned n = 1; n <= 10; ++n)
            CHECK(f.s.language_count(n) == count_factor_free(f.r, n, f.forbidden));
}

TEST_CASE("full shift and restricted digits") {
    CHECK(Subshift::full_shift(Radix(2)).language_count(5) == 32);
    const auto d012 = Subshift::restricted_digits(Radix(10), {0, 1, 2});
    CHECK(d012.language_count(3) == 27);
    // single-letter forbiddens give the same language
    std::vector<DigitWord> forb;
    for (std::uint32_t d = 3; d < 10; ++d) forb.push_back(DigitWord({d}, Radix(10)));
    const auto via_forb = Subshift::sft_from_forbidden(Radix(10), forb);
    for (unsigned n = 1; n <= 4; ++n) CHECK(via_forb.language_count(n) == d012.language_count(n));
}

TEST_CASE("empty subshift is reported") {
    const auto dead = Subshift::sft_from_forbidden(
        Radix(2), {DigitWord({0}, Radix(2)), DigitWord({1}, Radix(2))});
    CHECK(dead.empty());
    CHECK(dead.language_count(1) == 0);
    CHECK(dead.embed(100).elements() == std::vector<std::uint64_t>{0});
}

TEST_CASE("even shift language") {
    const auto e = Subshift::even_shift();
    // 1001 has two 0s between its 1s, 101 has one
    const auto A = e.embed(16);
    CHECK(A.contains(9));
    CHECK_FALSE(A.contains(5));
    CHECK(A.contains(3));  // 11: zero 0s between 1s, zero is even
}

TEST_CASE("prime gap shift matches the known first elements") {
    const auto p = Subshift::prime_gap_shift(7);
    const auto A = p.embed(80);
    const std::vector<std::uint64_t> expect{0,  1,  2,  4,  8,  9,  16, 17, 18,
                                            32, 34, 36, 64, 65, 68, 72, 73};
    CHECK(A.elements() == expect);
    // 1 is not prime: a single 0 between 1s never occurs
    CHECK_FALSE(Subshift::prime_gap_shift(2).embed(8).contains(5));  // 101
}

TEST_CASE("entropy estimates") {
    const double golden_dim = std::log((1 + std::sqrt(5.0)) / 2) / std::log(2.0);
    const auto ge = golden().entropy(60);
    CHECK(std::abs(ge.slope - golden_dim) < 1e-3);
    CHECK(std::abs(ge.spectral - golden_dim) < 1e-6);

    const auto fe = Subshift::full_shift(Radix(3)).entropy(20);
    CHECK(std::abs(fe.slope - 1.0) < 1e-9);

    const auto pe = Subshift::prime_gap_shift(50).entropy(60);
    CHECK(std::abs(pe.slope - 0.30293 / std::log(2.0)) < 5e-3);

    CHECK_FALSE(Subshift::sft_from_forbidden(Radix(2), {DigitWord({0}, Radix(2)),
                                                        DigitWord({1}, Radix(2))})
                    .entropy(10)
                    .defined);
}

TEST_CASE("entropy is monotone under levelwise language inclusion") {
    const auto g = golden();
    const auto f = Subshift::full_shift(Radix(2));
    for (unsigned n = 1; n <= 10; ++n) CHECK(g.language_count(n) <= f.language_count(n));
    CHECK(g.entropy(40).slope <= f.entropy(40).slope + 1e-6);
}

TEST_CASE("embedding golden mean") {
    const auto A = golden().embed(16);
    CHECK(A.elements() == std::vector<std::uint64_t>{0, 1, 2, 4, 5, 8, 9, 10});
    const auto full = Subshift::full_shift(Radix(2)).embed(8);
    CHECK(full.elements() == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("embedding cardinality matches the word count at every level") {
    // |A cap [0, r^n)| = |L_n| (words padded with leading zeros biject with
    // integers below r^n; 0 is the empty word)
    for (const auto& s : {golden(), Subshift::even_shift(), Subshift::prime_gap_shift(5),
                          Subshift::restricted_digits(Radix(3), {0, 2})}) {
        const unsigned r = s.radix().value;
        std::uint64_t win = 1;
        const auto A = s.embed(ipow_u64(r, 12));
        for (unsigned n = 1; n <= 12; ++n) {
            win *= r;
            CHECK(BigInt(A.count_below(win)) == s.language_count(n));
        }
    }
}

TEST_CASE("embedded sets are times-r invariant") {
    for (const auto& s : {golden(), Subshift::even_shift(), Subshift::prime_gap_shift(7)}) {
        const auto A = s.embed(1u << 14);
        const auto res = check_invariance(A, s.radix());
        CHECK(res.phi_ok);
        CHECK(res.psi_ok);
    }
}

TEST_CASE("fixtures parse") {
    const auto g = Subshift::from_fixture_string("radix 2\nforbid 11\n");
    CHECK(g.language_count(8) == golden().language_count(8));
    const auto e = Subshift::from_fixture_string("even\n");
    CHECK(e.embed(16).contains(9));
    const auto p = Subshift::from_fixture_string("primegap 7\n");
    CHECK(p.embed(80).size() == 17);
    const auto d = Subshift::from_fixture_string("radix 3\ndigits 0 2\n");
    CHECK(d.language_count(4) == 16);
}
