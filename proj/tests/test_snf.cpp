#include "doctest.h"
#include "gog/snf.hpp"
#include "testutil.hpp"

#include <random>

using namespace gog;

namespace {

IntMat random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
    IntMat m(r, c);
    std::uniform_int_distribution<int> d(lo, hi);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
    SmithResult s = smith_normal_form(IntMat::identity(4));
    CHECK(s.rank == 4);
    for (int i = 0; i < 4; ++i) CHECK(s.diagonal[static_cast<size_t>(i)] == 1);
}

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
    IntMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    SmithResult s = smith_normal_form(m);
    CHECK(s.diagonal[0] == 1);
    CHECK(s.diagonal[1] == 6);
    CHECK(s.u * m * s.v == s.s);
}

TEST_CASE("smith normal form against the minor-gcd oracle") {
    std::mt19937 rng(20260810);
    for (int iter = 0; iter < 60; ++iter) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        if (iter < 20) r = c = 5;  // the documented shape
        IntMat m = random_matrix(rng, r, c, -3, 3);
        SmithResult s = smith_normal_form(m);

        CHECK(s.u * m * s.v == s.s);
        Int du = determinant(s.u), dv = determinant(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (int i = 0; i + 1 < static_cast<int>(s.diagonal.size()); ++i) {
            const Int& a = s.diagonal[static_cast<size_t>(i)];
            const Int& b = s.diagonal[static_cast<size_t>(i + 1)];
            if (a == 0) CHECK(b == 0);
            else CHECK(b % a == 0);
        }
        std::vector<Int> expect = testutil::minor_gcd_invariants(m);
        REQUIRE(expect.size() == s.diagonal.size());
        for (size_t i = 0; i < expect.size(); ++i) CHECK(expect[i] == s.diagonal[i]);
    }
}

TEST_CASE("integer solve and kernel") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int r = 1 + static_cast<int>(rng() % 4);
        int c = 1 + static_cast<int>(rng() % 4);
        IntMat m = random_matrix(rng, r, c, -4, 4);
        // Solvable by construction.
        std::vector<Int> x(static_cast<size_t>(c));
        for (int j = 0; j < c; ++j) x[static_cast<size_t>(j)] = static_cast<int>(rng() % 7) - 3;
        std::vector<Int> b(static_cast<size_t>(r), 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b[static_cast<size_t>(i)] += m.at(i, j) * x[static_cast<size_t>(j)];
        auto sol = solve_integer(m, b);
        REQUIRE(sol.has_value());
        for (int i = 0; i < r; ++i) {
            Int acc = 0;
            for (int j = 0; j < c; ++j) acc += m.at(i, j) * (*sol)[static_cast<size_t>(j)];
            CHECK(acc == b[static_cast<size_t>(i)]);
        }
        // Kernel columns really annihilate, and the count matches the rank.
        auto ker = integer_kernel(m);
        CHECK(static_cast<int>(ker.size()) == c - rank_over_q(m));
        for (const auto& k : ker)
            for (int i = 0; i < r; ++i) {
                Int acc = 0;
                for (int j = 0; j < c; ++j) acc += m.at(i, j) * k[static_cast<size_t>(j)];
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("unsolvable system is reported") {
    IntMat m(2, 1);
    m.at(0, 0) = 2;
    m.at(1, 0) = 4;
    CHECK(!solve_integer(m, {Int(1), Int(2)}).has_value());
    CHECK(solve_integer(m, {Int(2), Int(4)}).has_value());
}

TEST_CASE("unimodular inverse") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        // Random unimodular via products of elementary matrices.
        int n = 2 + static_cast<int>(rng() % 3);
        IntMat u = IntMat::identity(n);
        for (int k = 0; k < 6; ++k) {
            int i = static_cast<int>(rng() % static_cast<unsigned>(n));
            int j = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (i == j) continue;
            IntMat e = IntMat::identity(n);
            e.at(i, j) = static_cast<int>(rng() % 5) - 2;
            u = u * e;
        }
        IntMat inv = inverse_unimodular(u);
        CHECK(u * inv == IntMat::identity(n));
    }
}
