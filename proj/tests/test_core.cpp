#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conelift/core.hpp"

using namespace conelift;

namespace {

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Mat random_matrix(std::mt19937& rng, size_t m, size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat A(m, Vec(n));
    for (auto& row : A)
        for (auto& x : row) x = d(rng);
    return A;
}

}  // namespace

TEST_CASE("triangularize on a 2x2 full-rank lattice") {
    Mat gens = {vec({2, 4}), vec({3, 5})};
    TriangularBasis tb = triangularize(gens);
    REQUIRE(tb.rank() == 2);
    CHECK(tb.pivot(0) > 0);
    CHECK(tb.pivot(1) > 0);
    CHECK(tb.rows[1][0] == 0);
    // |det| is preserved by row operations and column swaps
    CHECK(tb.pivot(0) * tb.pivot(1) == 2);
    for (const Vec& g : gens) CHECK(lattice_member(tb, tb.to_working(g)));
}

TEST_CASE("triangularize drops dependent rows") {
    Mat gens = {vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})};
    TriangularBasis tb = triangularize(gens);
    CHECK(tb.rank() == 2);
}

TEST_CASE("triangularize swaps columns to find pivots") {
    Mat gens = {vec({0, 0, 5}), vec({0, 3, 1})};
    TriangularBasis tb = triangularize(gens);
    REQUIRE(tb.rank() == 2);
    CHECK(tb.rows[0][0] != 0);
    CHECK(tb.rows[1][0] == 0);
    // round trip through the recorded permutation
    Vec w = tb.to_working(gens[1]);
    CHECK(tb.to_original(w) == gens[1]);
}

TEST_CASE("integer_kernel of [1 1 -1]") {
    Mat A = {vec({1, 1, -1})};
    Mat K = integer_kernel(A);
    REQUIRE(K.size() == 2);
    for (const Vec& k : K) CHECK(k[0] + k[1] - k[2] == 0);

    // every kernel point in a small box is an integer combination
    TriangularBasis tb = triangularize(K);
    int hits = 0;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c) {
                if (a + b - c != 0) continue;
                ++hits;
                CHECK(lattice_member(tb, tb.to_working(vec({a, b, c}))));
            }
    CHECK(hits > 1);
}

TEST_CASE("integer_kernel is saturated") {
    // ker([2 -2]) must contain (1,1), not just (2,2)
    Mat K = integer_kernel({vec({2, -2})});
    REQUIRE(K.size() == 1);
    CHECK(abs(K[0][0]) == 1);
    CHECK(K[0][0] == K[0][1]);
}

TEST_CASE("integer_kernel of full-column-rank matrix is empty") {
    Mat A = {vec({1, 0}), vec({0, 1}), vec({3, 7})};
    CHECK(integer_kernel(A).empty());
}

TEST_CASE("integer_kernel members on random instances") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        size_t d = 1 + rng() % 3, n = 3 + rng() % 4;
        Mat A = random_matrix(rng, d, n, -3, 3);
        Mat K = integer_kernel(A);
        for (const Vec& k : K) {
            for (const Vec& row : A) {
                Int dot = 0;
                for (size_t i = 0; i < n; ++i) dot += row[i] * k[i];
                CHECK(dot == 0);
            }
        }
        if (!K.empty()) {
            TriangularBasis tb = triangularize(K);
            CHECK(tb.rank() == K.size());
        }
    }
}

TEST_CASE("project takes a prefix") {
    CHECK(project(vec({4, -1, 7}), 2) == vec({4, -1}));
    CHECK(project(vec({4, -1, 7}), 3) == vec({4, -1, 7}));
    CHECK(project(project(vec({4, -1, 7}), 3), 1) ==
          project(vec({4, -1, 7}), 1));
    CHECK_THROWS_AS(project(vec({4, -1, 7}), 0), std::invalid_argument);
    CHECK_THROWS_AS(project(vec({4, -1, 7}), 4), std::invalid_argument);
}

TEST_CASE("sign_divides examples") {
    // prefix componentwise <=, last coordinate same sign and smaller in
    // absolute value
    CHECK(sign_divides(vec({1, 0, -2}), vec({2, 1, -3}), 3));
    CHECK(!sign_divides(vec({1, 0, 2}), vec({2, 1, -3}), 3));
    CHECK(!sign_divides(vec({1, 2, -2}), vec({2, 1, -3}), 3));
    CHECK(sign_divides(vec({0, 0, 0}), vec({2, 1, -3}), 3));
    CHECK(sign_divides(vec({1, 1, 0}), vec({1, 1, -3}), 3));
}

TEST_CASE("sign_divides is a partial order on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int it = 0; it < 200; ++it) {
        Vec u(4), v(4), w(4);
        for (size_t i = 0; i < 4; ++i) {
            u[i] = d(rng);
            v[i] = d(rng);
            w[i] = d(rng);
        }
        for (Vec* p : {&u, &v, &w})
            for (size_t i = 0; i + 1 < 4; ++i)
                if ((*p)[i] < 0) (*p)[i] = -(*p)[i];
        CHECK(sign_divides(u, u, 4));
        if (sign_divides(u, v, 4) && sign_divides(v, u, 4)) CHECK(u == v);
        if (sign_divides(u, v, 4) && sign_divides(v, w, 4))
            CHECK(sign_divides(u, w, 4));
    }
}

TEST_CASE("lattice_member back-substitution") {
    TriangularBasis tb = triangularize({vec({2, 1, 0}), vec({0, 3, 1})});
    CHECK(lattice_member(tb, tb.to_working(vec({2, 1, 0}))));
    CHECK(lattice_member(tb, tb.to_working(vec({2, 4, 1}))));
    CHECK(lattice_member(tb, tb.to_working(vec({0, 0, 0}))));
    CHECK(!lattice_member(tb, tb.to_working(vec({1, 1, 1}))));
    CHECK(!lattice_member(tb, tb.to_working(vec({1, 2, 0}))));
}
