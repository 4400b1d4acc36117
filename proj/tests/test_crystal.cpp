#include <doctest.h>

#include <random>

#include "lcone/cone.hpp"
#include "lcone/crystal.hpp"
#include "lcone/rectangle.hpp"

using namespace lcone;

namespace {

std::vector<long long> fig8_state() {
    // rank 5; coordinates c12 = c23 = c45 = c14 = 1, all others 0
    std::vector<long long> c(longest_length(5), 0);
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {4, 5}, {1, 4}})
        c[standard_root_position(5, i, j)] = 1;
    return c;
}

} // namespace

TEST_SUITE_BEGIN("crystal");

TEST_CASE("lowering profile fixtures") {
    std::vector<long long> zero(longest_length(5), 0);
    for (int i = 1; i <= 5; ++i)
        for (long long f : f_profile(5, zero, i).values) CHECK(f == 0);

    FProfile p = f_profile(5, fig8_state(), 3);
    CHECK(p.values == std::vector<long long>{-1, 0, 0});

    std::vector<long long> c2(3, 0);
    c2[standard_root_position(2, 2, 3)] = 1;
    CHECK(f_profile(2, c2, 2).values[0] == 1);
}

TEST_CASE("lowering operator fixtures") {
    std::vector<long long> zero3(longest_length(3), 0);
    auto f1 = ftilde(3, zero3, 1);
    CHECK(f1[standard_root_position(3, 1, 2)] == 1);
    long long sum = 0;
    for (long long x : f1) sum += x;
    CHECK(sum == 1);

    auto after = ftilde(5, fig8_state(), 3);
    auto want = fig8_state();
    want[standard_root_position(5, 3, 5)] = 1;
    want[standard_root_position(5, 4, 5)] = 0;
    CHECK(after == want);

    std::vector<long long> zero2(3, 0);
    CHECK(ftilde(2, zero2, 2) == std::vector<long long>{1, 0, 0});
}

TEST_CASE("crossing out fixtures") {
    SymbolSequence s = crossing_out(5, fig8_state(), 3);
    CHECK(s.symbols == "--0");
    CHECK(s.reduced == "--");
    CHECK(s.case_id == 10);
    CHECK(s.j0 == 5);

    SymbolSequence abs = classify_symbols(1, "00++--+++0-0--+----00");
    CHECK(abs.reduced == "0---");
    CHECK(abs.case_id == 2);

    std::vector<long long> zero(longest_length(3), 0);
    SymbolSequence z = crossing_out(3, zero, 1);
    CHECK(z.j0 == 2);

    std::vector<long long> bad(longest_length(3), 0);
    bad[standard_root_position(3, 1, 3)] = 2;
    CHECK_THROWS_AS(crossing_out(3, bad, 1), input_error);
}

TEST_CASE("crossing out agrees with the profile argmax") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 4; ++n) {
        int k = longest_length(n);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<long long> c(k);
            for (auto& x : c) x = rng() & 1;
            for (int i = 1; i <= n; ++i) {
                // clear pairs that break the 0/1 precondition
                for (int l = i + 2; l <= n + 1; ++l)
                    if (c[standard_root_position(n, i, l)] == 1)
                        c[standard_root_position(n, i + 1, l)] = 0;
                SymbolSequence s = crossing_out(n, c, i);
                FProfile p = f_profile(n, c, i);
                int best = 0;
                for (size_t t = 1; t < p.values.size(); ++t)
                    if (p.values[t] > p.values[best]) best = (int)t;
                CHECK(s.j0 == i + 1 + best);
            }
        }
    }
}

TEST_CASE("raising inverts lowering") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 4; ++n) {
        int k = longest_length(n);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<long long> c(k);
            for (auto& x : c) x = rng() % 3;
            for (int i = 1; i <= n; ++i) {
                auto down = ftilde(n, c, i);
                auto back = etilde(n, down, i);
                REQUIRE(back.has_value());
                CHECK(*back == c);
                if (epsilon(n, c, i) > 0) {
                    auto up = etilde(n, c, i);
                    REQUIRE(up.has_value());
                    CHECK(ftilde(n, *up, i) == c);
                } else {
                    CHECK_FALSE(etilde(n, c, i).has_value());
                }
            }
        }
    }
    std::vector<long long> zero(longest_length(3), 0);
    for (int i = 1; i <= 3; ++i) {
        CHECK(epsilon(3, zero, i) == 0);
        CHECK(*etilde(3, ftilde(3, zero, i), i) == zero);
    }
}

TEST_CASE("monomial application fixtures") {
    CHECK(apply_monomial(make_reduced_word(2, {1, 2, 1}), {0, 1, 0}) ==
          std::vector<long long>{1, 0, 0});
    CHECK(apply_monomial(make_reduced_word(2, {2, 1, 2}), {0, 1, 0}) ==
          std::vector<long long>{0, 0, 1});
}

TEST_CASE("string extraction round trips") {
    ReducedWord w = make_reduced_word(2, {1, 2, 1});
    std::vector<long long> zero3(longest_length(2), 0);
    CHECK(string_extract(ftilde(2, zero3, 1), w) ==
          std::vector<long long>{1, 0, 0});
    CHECK(string_extract(apply_monomial(w, {0, 1, 0}), w) ==
          std::vector<long long>{0, 1, 0});
    CHECK(string_extract(zero3, w) == std::vector<long long>{0, 0, 0});
}

TEST_CASE("coordinate transitions") {
    ReducedWord a = make_reduced_word(2, {1, 2, 1});
    ReducedWord b = make_reduced_word(2, {2, 1, 2});
    CHECK(transition_R(a, b, {0, 1, 0}) == std::vector<long long>{1, 0, 1});
    CHECK(transition_R(b, a, {1, 0, 1}) == std::vector<long long>{0, 1, 0});
    CHECK(transition_R(a, a, {3, 1, 4}) == std::vector<long long>{3, 1, 4});

    CHECK(transition_T(a, b, {0, 1, 0}) == std::vector<long long>{1, 0, 0});
    // T3(1,1,0) = (max(0,0), 1, min(1,1)) = (0,1,1)
    CHECK(transition_T(a, b, {1, 1, 0}) == std::vector<long long>{0, 1, 1});

    CHECK(s_map(a, standard_word(2), {0, 1, 0}) ==
          std::vector<long long>{1, 0, 0});
    CHECK(s_map(a, standard_word(2), {0, 0, 0}) ==
          std::vector<long long>{0, 0, 0});
}

TEST_CASE("weights are conserved by transitions") {
    std::mt19937 rng(3);
    for (int n = 2; n <= 3; ++n) {
        auto words = enumerate_reduced_words(n);
        for (int trial = 0; trial < 50; ++trial) {
            const ReducedWord& u = words[rng() % words.size()];
            const ReducedWord& v = words[rng() % words.size()];
            std::vector<long long> c(u.length());
            for (auto& x : c) x = rng() % 4;
            CHECK(weight_alpha(v, transition_R(u, v, c)) == weight_alpha(u, c));
        }
    }
}

TEST_CASE("block words are reduced") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(is_reduced_w0(n, block_word(n, false).letters));
        CHECK(is_reduced_w0(n, block_word(n, true).letters));
    }
    CHECK(block_word(3, false).letters == std::vector<int>{1, 3, 2, 1, 3, 2});
}

TEST_CASE("conjecture explorer") {
    ConjectureReport r1 = conjecture_explore(1, 10, 1);
    REQUIRE(r1.classes.size() == 1);
    CHECK(r1.classes[0].independent);

    ConjectureReport r2 = conjecture_explore(2, 50, 1);
    REQUIRE(r2.classes.size() == 2);
    for (const auto& c : r2.classes) {
        CHECK(c.rank == 3);
        CHECK(c.independent);
        CHECK(c.linearity_violations == 0);
    }

    ConjectureReport r3 = conjecture_explore(3, 30, 1);
    CHECK(r3.classes.size() == 8);
    CHECK_THROWS_AS(conjecture_explore(5, 10, 1), capacity_error);
}

TEST_SUITE_END();
