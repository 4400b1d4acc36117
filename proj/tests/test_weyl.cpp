#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lcone/weyl.hpp"

using namespace lcone;

namespace {

// Independent count of reduced words for the longest element: standard
// Young tableaux of staircase shape (n, n-1, ..., 1) by the hook length
// formula, k! / prod(hooks).
long long staircase_tableau_count(int n) {
    int k = n * (n + 1) / 2;
    std::vector<int> shape;
    for (int r = n; r >= 1; --r) shape.push_back(r);
    std::vector<long long> hooks;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int arm = shape[r] - c - 1;
            int leg = 0;
            for (int rr = r + 1; rr < n; ++rr)
                if (shape[rr] > c) ++leg;
            hooks.push_back(arm + leg + 1);
        }
    // k! / prod(hooks), dividing greedily to stay in 64 bits
    long long num = 1;
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    std::vector<long long> rem(hooks);
    for (long long f = 2; f <= k; ++f) {
        long long x = f;
        for (long long& h : rem) {
            if (h == 1) continue;
            long long g = std::gcd(x, h);
            x /= g;
            h /= g;
        }
        num *= x;
    }
    for (long long h : rem) REQUIRE(h == 1);
    return num;
}

} // namespace

TEST_SUITE_BEGIN("weyl");

TEST_CASE("word counts match the hook length formula") {
    long long expected[] = {0, 1, 2, 16, 768};
    for (int n = 1; n <= 4; ++n) {
        CHECK(staircase_tableau_count(n) == expected[n]);
        CHECK((long long)enumerate_reduced_words(n).size() == expected[n]);
    }
}

TEST_CASE("class counts match normal-form bucketing") {
    // Independent recomputation: bucket words by Cartier-Foata normal form.
    long long expected[] = {0, 1, 2, 8, 62};
    for (int n = 1; n <= 4; ++n) {
        std::set<std::vector<int>> forms;
        for (const ReducedWord& w : enumerate_reduced_words(n))
            forms.insert(commutation_normal_form(n, w.letters));
        CHECK((long long)forms.size() == expected[n]);
        CHECK((long long)commutation_classes(n).classes.size() == expected[n]);
    }
}

TEST_CASE("standard word") {
    CHECK(standard_word(2).letters == std::vector<int>{2, 1, 2});
    CHECK(standard_word(3).letters == std::vector<int>{3, 2, 3, 1, 2, 3});
    CHECK(standard_word(5).length() == 15);
    for (int n = 1; n <= 6; ++n)
        CHECK(is_reduced_w0(n, standard_word(n).letters));
}

TEST_CASE("validation rejects non-reduced input") {
    CHECK_THROWS_AS(make_reduced_word(2, {1, 1, 1}), input_error);
    CHECK_THROWS_AS(make_reduced_word(2, {1, 2}), input_error);
    CHECK_THROWS_AS(make_reduced_word(2, {1, 2, 3}), input_error);
    CHECK_NOTHROW(make_reduced_word(2, {1, 2, 1}));
}

TEST_CASE("root order fixtures") {
    auto r121 = root_order(make_reduced_word(2, {1, 2, 1}));
    CHECK(r121 == std::vector<PositiveRoot>{{1, 2}, {1, 3}, {2, 3}});
    auto r212 = root_order(make_reduced_word(2, {2, 1, 2}));
    CHECK(r212 == std::vector<PositiveRoot>{{2, 3}, {1, 3}, {1, 2}});
}

TEST_CASE("root order is a permutation of the positive roots") {
    for (int n = 1; n <= 4; ++n)
        for (const ReducedWord& w : enumerate_reduced_words(n)) {
            auto ro = root_order(w);
            std::set<PositiveRoot> seen(ro.begin(), ro.end());
            CHECK((int)seen.size() == w.length());
            for (const PositiveRoot& r : seen) {
                CHECK(1 <= r.lo);
                CHECK(r.lo < r.hi);
                CHECK(r.hi <= n + 1);
            }
        }
}

TEST_CASE("minimal pair counts") {
    for (int n = 1; n <= 4; ++n)
        for (const ReducedWord& w : enumerate_reduced_words(n))
            CHECK((int)minimal_pairs(w).size() == w.length() - n);
}

TEST_CASE("moves stay reduced and connect everything") {
    for (int n = 2; n <= 3; ++n) {
        auto words = enumerate_reduced_words(n);
        for (const ReducedWord& w : words)
            for (const Move& m : moves(w))
                CHECK(is_reduced_w0(n, m.result.letters));
        // move_path reaches every word from the standard one
        ReducedWord src = standard_word(n);
        for (const ReducedWord& w : words) {
            auto path = move_path(src, w);
            ReducedWord cur = src;
            for (const Move& m : path) cur = m.result;
            CHECK(cur == w);
        }
    }
}

TEST_CASE("commutation equivalence matches class partition") {
    CommutationClasses cc = commutation_classes(3);
    for (const auto& cls : cc.classes)
        for (size_t t = 1; t < cls.size(); ++t)
            CHECK(commutation_equivalent(3, cc.words[cls[0]].letters,
                                         cc.words[cls[t]].letters));
    CHECK_FALSE(commutation_equivalent(2, {1, 2, 1}, {2, 1, 2}));
}

TEST_CASE("enumeration refuses oversized ranks") {
    CHECK_THROWS_AS(enumerate_reduced_words(7, 5), capacity_error);
}

TEST_SUITE_END();
