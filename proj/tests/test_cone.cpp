#include <doctest.h>

#include <map>

#include "lcone/cone.hpp"

using namespace lcone;

namespace {

const SpanningVector& find_simple(const std::vector<SpanningVector>& svs,
                                  int j) {
    for (const SpanningVector& sv : svs)
        if (sv.label.simple && sv.label.j == j) return sv;
    REQUIRE(false);
    return svs.front();
}

const SpanningVector& find_quiver(const std::vector<SpanningVector>& svs,
                                  const std::string& name) {
    for (const SpanningVector& sv : svs)
        if (!sv.label.simple && sv.label.quiver.str() == name) return sv;
    REQUIRE(false);
    return svs.front();
}

} // namespace

TEST_SUITE_BEGIN("cone");

TEST_CASE("matrix fixtures") {
    ConeMatrix m121 = cone_matrix(make_reduced_word(2, {1, 2, 1}));
    std::vector<std::vector<long long>> want121 = {
        {1, 0, 0}, {0, 0, 1}, {-1, 1, -1}};
    CHECK(m121.rows == want121);
    CHECK((m121.det == 1 || m121.det == -1));

    ConeMatrix m212 = cone_matrix(make_reduced_word(2, {2, 1, 2}));
    std::vector<std::vector<long long>> want212 = {
        {0, 0, 1}, {1, 0, 0}, {-1, 1, -1}};
    CHECK(m212.rows == want212);
}

TEST_CASE("determinant is a unit for every word") {
    for (int n = 1; n <= 4; ++n)
        for (const ReducedWord& w : enumerate_reduced_words(n)) {
            ConeMatrix m = cone_matrix(w);
            CHECK((m.det == 1 || m.det == -1));
        }
}

TEST_CASE("exact inversion") {
    std::vector<std::vector<long long>> a = {{2, 1}, {1, 1}};
    long long det = 0;
    auto inv = inverse_unimodular(a, &det);
    CHECK(det == 1);
    CHECK(inv == std::vector<std::vector<long long>>{{1, -1}, {-1, 2}});
    CHECK_THROWS_AS(inverse_unimodular({{2, 0}, {0, 1}}), internal_error);
    CHECK_THROWS_AS(inverse_unimodular({{1, 1}, {1, 1}}), internal_error);
}

TEST_CASE("inverse is exact for every cone matrix") {
    for (int n = 1; n <= 3; ++n)
        for (const ReducedWord& w : enumerate_reduced_words(n)) {
            ConeMatrix m = cone_matrix(w);
            auto inv = inverse_unimodular(m.rows);
            int k = w.length();
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    long long s = 0;
                    for (int t = 0; t < k; ++t)
                        s += m.rows[r][t] * inv[t][c];
                    CHECK(s == (r == c ? 1 : 0));
                }
        }
}

TEST_CASE("spanning vector fixtures") {
    auto svs = spanning_vectors(make_reduced_word(2, {1, 2, 1}));
    REQUIRE(svs.size() == 3);
    CHECK(find_simple(svs, 1).coords == std::vector<long long>{1, 1, 0});
    CHECK(find_simple(svs, 2).coords == std::vector<long long>{0, 1, 1});
    CHECK(find_quiver(svs, "R").coords == std::vector<long long>{0, 1, 0});

    auto svs2 = spanning_vectors(make_reduced_word(2, {2, 1, 2}));
    CHECK(find_quiver(svs2, "L").coords == std::vector<long long>{0, 1, 0});

    auto svs6 = spanning_vectors(make_reduced_word(3, {1, 3, 2, 1, 3, 2}));
    CHECK(find_quiver(svs6, "L-").coords ==
          std::vector<long long>{0, 0, 1, 1, 0, 0});
}

TEST_CASE("root multiset fixtures") {
    RootMultiset m = multiset_M(parse_partial_quiver(3, "L-"));
    CHECK(m == RootMultiset{{{1, 4}, 1}, {{2, 4}, 1}});
    CHECK(multiset_M_simple(2, 1) == RootMultiset{{{1, 2}, 1}, {{1, 3}, 1}});
    RootMultiset big = multiset_M(parse_partial_quiver(5, "LRL-"));
    CHECK(big.at(PositiveRoot{1, 6}) == 2);
}

TEST_CASE("membership fixtures") {
    ReducedWord w = make_reduced_word(2, {1, 2, 1});
    CHECK(cone_contains(w, {0, 1, 0}));
    CHECK_FALSE(cone_contains(w, {1, 0, 0}));
}

TEST_CASE("spanning vectors are nonnegative and inside the cone") {
    for (int n = 1; n <= 3; ++n)
        for (const ReducedWord& w : enumerate_reduced_words(n))
            for (const SpanningVector& sv : spanning_vectors(w)) {
                for (long long x : sv.coords) CHECK(x >= 0);
                CHECK(cone_contains(w, sv.coords));
            }
}

TEST_CASE("root multisets depend only on the label") {
    for (int n = 1; n <= 3; ++n)
        for (const ReducedWord& w : enumerate_reduced_words(n))
            for (const SpanningVector& sv : spanning_vectors(w)) {
                RootMultiset want = sv.label.simple
                                        ? multiset_M_simple(n, sv.label.j)
                                        : multiset_M(sv.label.quiver);
                CHECK(root_multiset_of(w, sv.coords) == want);
            }
}

TEST_SUITE_END();
