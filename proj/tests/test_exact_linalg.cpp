#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prym/f2.hpp"
#include "prym/random_gen.hpp"
#include "prym/smith.hpp"

using namespace prym;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMat random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(rng.range(-bound, bound));
    return m;
}

} // namespace

TEST_CASE("smith form of diag(2, 3)") {
    IntMat m = from_rows({{2, 0}, {0, 3}});
    SmithForm sf = smith_normal_form(m);
    CHECK(sf.rank == 2);
    CHECK(sf.d(0, 0) == 1);
    CHECK(sf.d(1, 1) == 6);
    CHECK(sf.u * m * sf.v == sf.d);
}

TEST_CASE("smith form of zero and identity") {
    SmithForm z = smith_normal_form(from_rows({{0}}));
    CHECK(z.rank == 0);
    CHECK(z.d(0, 0) == 0);
    SmithForm id3 = smith_normal_form(IntMat::identity(3));
    CHECK(id3.rank == 3);
    CHECK(id3.d == IntMat::identity(3));
}

TEST_CASE("cokernel torsion") {
    CokernelInvariants a = cokernel_invariants(from_rows({{2, 0}, {0, 2}}));
    REQUIRE(a.torsion.size() == 2);
    CHECK(a.torsion[0] == 2);
    CHECK(a.torsion[1] == 2);
    CHECK(a.free_rank == 0);
    CokernelInvariants b = cokernel_invariants(from_rows({{2}}));
    REQUIRE(b.torsion.size() == 1);
    CHECK(b.torsion[0] == 2);
}

TEST_CASE("kernel bases") {
    IntMat k = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK((k(0, 0) == 1 || k(0, 0) == -1));
    CHECK(kernel_basis(IntMat::identity(3)).cols() == 0);
    CHECK(kernel_basis(IntMat::zero(2, 2)).cols() == 2);
}

TEST_CASE("smith form properties on random matrices") {
    Rng rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        IntMat m = random_matrix(rng, r, c, 5);
        SmithForm sf = smith_normal_form(m);
        CHECK(sf.u * m * sf.v == sf.d);
        CHECK(is_unimodular(sf.u));
        CHECK(is_unimodular(sf.v));
        for (std::size_t i = 0; i + 1 < sf.rank; ++i) {
            CHECK(sf.d(i, i) > 0);
            CHECK(mpz_divisible_p(sf.d(i + 1, i + 1).get_mpz_t(),
                                  sf.d(i, i).get_mpz_t()));
        }
        for (std::size_t i = 0; i < std::min(r, c); ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && i < r) CHECK(sf.d(i, j) == 0);
    }
}

TEST_CASE("kernel is saturated") {
    Rng rng(12);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(6);
        IntMat m = random_matrix(rng, r, c, 4);
        IntMat k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(rank_of(m) + k.cols() == c);
        if (k.cols() > 0) {
            SmithForm ks = smith_normal_form(k);
            REQUIRE(ks.rank == k.cols());
            for (std::size_t i = 0; i < ks.rank; ++i) CHECK(ks.d(i, i) == 1);
        }
    }
}

TEST_CASE("cokernel invariants are unimodular-stable") {
    Rng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        IntMat m = random_matrix(rng, r, c, 4);
        UnimodularPair left = random_unimodular(rng, r, 3 * r);
        UnimodularPair right = random_unimodular(rng, c, 3 * c);
        CokernelInvariants a = cokernel_invariants(m);
        CokernelInvariants b = cokernel_invariants(left.u * m * right.u);
        CHECK(a.torsion == b.torsion);
        CHECK(a.free_rank == b.free_rank);
    }
}

TEST_CASE("solve_exact round trip and infeasibility") {
    Rng rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        IntMat m = random_matrix(rng, r, c, 4);
        IntMat x0 = random_matrix(rng, c, 2, 3);
        IntMat rhs = m * x0;
        auto x = solve_exact(m, rhs);
        REQUIRE(x.has_value());
        CHECK(m * *x == rhs);
    }
    IntMat two = from_rows({{2}});
    IntMat odd = from_rows({{1}});
    CHECK(!solve_exact(two, odd).has_value());
}

TEST_CASE("unimodular inverse tracks the forward matrix") {
    Rng rng(15);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t n = 1 + rng.below(6);
        UnimodularPair p = random_unimodular(rng, n, 4 * n);
        CHECK(p.u * p.u_inv == IntMat::identity(n));
        CHECK(inverse_unimodular(p.u) == p.u_inv);
    }
}

TEST_CASE("mod-2 rank and solving") {
    F2Mat a = F2Mat::from_int(from_rows({{1, 1}, {1, 0}}));
    CHECK(a.rank() == 2);
    CHECK(a.invertible());
    F2Mat sing = F2Mat::from_int(from_rows({{1, 1}, {1, 1}}));
    CHECK(sing.rank() == 1);
    CHECK(!sing.invertible());
    CHECK(f2_rank_of(from_rows({{2, 4}, {6, 8}})) == 0);
}

TEST_CASE("complete_saturated_basis extends to a unimodular square") {
    Rng rng(16);
    for (int rep = 0; rep < 15; ++rep) {
        std::size_t n = 2 + rng.below(4);
        IntMat part = kernel_basis(random_matrix(rng, 1, n, 3));
        if (part.cols() == 0 || part.cols() == n) continue;
        IntMat rest = complete_saturated_basis(part);
        CHECK(is_unimodular(IntMat::hcat(part, rest)));
    }
}
