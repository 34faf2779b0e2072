#include <algorithm>
#include <stdexcept>

#include "bwdb/words.hpp"
#include "doctest.h"
#include "support/reference.hpp"

using namespace bwdb;

namespace {

Word W(const char* s, Symbol t) { return Word::parse(s, t); }

}  // namespace

TEST_SUITE("words") {
    TEST_CASE("word construction rejects out-of-alphabet symbols") {
        CHECK_THROWS_AS(Word({0, 3}, 3), std::invalid_argument);
        CHECK_THROWS_AS(Word::parse("12a", 10), std::invalid_argument);
        CHECK_NOTHROW(Word({0, 2}, 3));
        CHECK(Word({1, 12, 3}, 13).str() == "1.12.3");
        CHECK(W("021", 3).str() == "021");
    }

    TEST_CASE("weight examples") {
        CHECK(weight(W("000", 5)) == 0);
        CHECK(weight(W("021", 5)) == 3);
        CHECK(weight(W("004", 5)) == 4);
    }

    TEST_CASE("colex examples") {
        CHECK(colex_less(W("100", 3), W("010", 3)));
        CHECK_FALSE(colex_less(W("000", 3), W("000", 3)));
        CHECK(colex_less(W("111", 5), W("021", 5)));
        CHECK_THROWS_AS(colex_less(W("00", 3), W("000", 3)), std::invalid_argument);
    }

    TEST_CASE("colex is a strict total order matching reversed lexicographic order") {
        const auto all = ref::words(3, 3, 0, 6);
        for (const auto& a : all) {
            for (const auto& b : all) {
                const bool got = colex_less(std::span<const Symbol>(a), std::span<const Symbol>(b));
                CHECK(got == ref::colex_less(a, b));
                if (a == b) CHECK_FALSE(got);
                if (a != b) CHECK(got != colex_less(std::span<const Symbol>(b), std::span<const Symbol>(a)));
            }
        }
    }

    TEST_CASE("necklace examples") {
        auto a = necklace_info(W("011", 3));
        CHECK(a.is_necklace);
        CHECK(a.aperiodic_prefix_len == 3u);
        auto b = necklace_info(W("0101", 2));
        CHECK(b.is_necklace);
        CHECK(b.aperiodic_prefix_len == 2u);
        auto c = necklace_info(W("10", 2));
        CHECK_FALSE(c.is_necklace);
        CHECK_FALSE(c.aperiodic_prefix_len.has_value());
    }

    TEST_CASE("necklace test agrees with the rotation oracle on every short word") {
        for (unsigned t = 1; t <= 4; ++t) {
            for (unsigned n = 1; n <= 6; ++n) {
                if (n > 5 && t > 3) continue;
                for (const auto& a : ref::words(t, n, 0, n * (t - 1))) {
                    const auto info = necklace_info(std::span<const Symbol>(a));
                    REQUIRE(info.is_necklace == ref::is_necklace(a));
                    if (info.is_necklace) {
                        const std::size_t p = *info.aperiodic_prefix_len;
                        CHECK(p == ref::period(a));
                        CHECK(n % p == 0);
                        for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == a[i % p]);
                    }
                }
            }
        }
    }

    TEST_CASE("necklace comparisons are linear in the length") {
        std::uint64_t cmp = 0;
        std::vector<Symbol> a(40, 0);
        a.back() = 1;
        necklace_period(a, &cmp);
        CHECK(cmp <= 40);
    }

    TEST_CASE("enumerate_bounded_necklaces examples") {
        auto render_all = [](const std::vector<Word>& v) {
            std::vector<std::string> s;
            for (auto& w : v) s.push_back(w.str());
            return s;
        };
        CHECK(render_all(enumerate_bounded_necklaces({3, 3, 2})) ==
              std::vector<std::string>{"000", "001", "011", "002"});
        CHECK(render_all(enumerate_bounded_necklaces({5, 3, 4})) ==
              std::vector<std::string>{"000", "001", "011", "111", "021", "031", "002", "012", "112",
                                       "022", "003", "013", "004"});
        CHECK(render_all(enumerate_bounded_necklaces({1, 4, 0})) == std::vector<std::string>{"0000"});
    }

    TEST_CASE("enumerate_bounded_necklaces equals the brute-force filter") {
        for (Symbol t = 1; t <= 4; ++t) {
            for (std::size_t n = 1; n <= 5; ++n) {
                for (std::uint64_t w = 0; w <= n * (t - 1) + 1; ++w) {
                    const auto got = enumerate_bounded_necklaces({t, n, w});
                    const auto want = ref::necklaces_colex(t, static_cast<unsigned>(n), 0, w);
                    REQUIRE(got.size() == want.size());
                    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].vec() == want[i]);
                    for (std::size_t i = 1; i < got.size(); ++i) CHECK(colex_less(got[i - 1], got[i]));
                }
            }
        }
    }

    TEST_CASE("param validation, clamping and counting") {
        CHECK_THROWS_AS((ParamSet{0, 3, 1}.validate()), std::invalid_argument);
        CHECK_THROWS_AS((ParamSet{2, 0, 1}.validate()), std::invalid_argument);
        const ParamSet big{3, 4, 100};
        CHECK(big.effective_w() == 8);
        CHECK(big.clamped());
        CHECK(big.bounded_word_count() == 81);
        CHECK(ParamSet{5, 3, 4}.bounded_word_count() == 35);
        CHECK(ParamSet{3, 3, 2}.bounded_word_count() == 10);
        CHECK_THROWS_AS((ParamSet{1000, 40, 100000}.bounded_word_count()), std::overflow_error);
        for (Symbol t = 1; t <= 4; ++t)
            for (std::size_t n = 1; n <= 4; ++n)
                for (std::uint64_t w = 0; w <= 10; ++w)
                    CHECK(ParamSet{t, n, w}.bounded_word_count() ==
                          ref::sigma(t, static_cast<unsigned>(n), w).size());
    }

    TEST_CASE("word iteration visits each word once in lexicographic order") {
        std::vector<std::vector<Symbol>> seen;
        for_each_word_in_weight_range(3, 3, 1, 2, [&](std::span<const Symbol> s) {
            seen.emplace_back(s.begin(), s.end());
        });
        CHECK(seen == ref::words(3, 3, 1, 2));
        CHECK(std::is_sorted(seen.begin(), seen.end()));
    }

    TEST_CASE("fixed-weight necklaces") {
        const auto v = enumerate_fixed_weight_necklaces(5, 4, 4);
        CHECK(v.size() == 10);
        for (auto& w : v) CHECK(weight(w) == 4);
        CHECK(enumerate_fixed_weight_necklaces(2, 3, 9).empty());
    }
}
