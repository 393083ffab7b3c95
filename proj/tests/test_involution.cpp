#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prym/errors.hpp"
#include "prym/involution.hpp"
#include "prym/oracle.hpp"
#include "prym/random_gen.hpp"
#include "prym/smith.hpp"

using namespace prym;

namespace {

InvolutionLattice lat(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t n = rows.size();
    IntMat t(n, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) t(i, j++) = v;
        ++i;
    }
    return InvolutionLattice{n, t};
}

} // namespace

TEST_CASE("rank one sign module") {
    InvolutionLattice l = lat({{-1}});
    C2Decomposition d = decompose(l);
    CHECK(d.n_trivial == 0);
    CHECK(d.n_sign == 1);
    CHECK(d.n_perm == 0);
    ComponentGroup cg = component_group(l);
    CHECK(cg.f2_rank == 1);
    CHECK(cg.order == 2);
    REQUIRE(cg.representatives.size() == 2);
    CHECK(cg.representatives[0].num == std::vector<Integer>{0});
    // The nonzero class is represented by a half-integral point.
    CHECK(mpz_odd_p(cg.representatives[1].num[0].get_mpz_t()));
}

TEST_CASE("rank one trivial module") {
    InvolutionLattice l = lat({{1}});
    C2Decomposition d = decompose(l);
    CHECK(d.n_trivial == 1);
    CHECK(d.n_sign == 0);
    ComponentGroup cg = component_group(l);
    CHECK(cg.order == 1);
}

TEST_CASE("swap module") {
    InvolutionLattice l = lat({{0, 1}, {1, 0}});
    C2Decomposition d = decompose(l, true);
    CHECK(d.n_trivial == 0);
    CHECK(d.n_sign == 0);
    CHECK(d.n_perm == 1);
    REQUIRE(d.witness.has_value());
    CHECK(is_unimodular(*d.witness));
    SplitData sp = split(l);
    CHECK(sp.lambda_plus.cols() == 1);
    CHECK(sp.lambda_minus.cols() == 1);
    CHECK(component_group(l).f2_rank == 0);
}

TEST_CASE("mixed diagonal") {
    InvolutionLattice l = lat({{1, 0}, {0, -1}});
    C2Decomposition d = decompose(l);
    CHECK(d.n_trivial == 1);
    CHECK(d.n_sign == 1);
    CHECK(d.n_perm == 0);
    CHECK(component_group(l).order == 2);
    InvolutionLattice l2 = lat({{-1, 0}, {0, -1}});
    CHECK(component_group(l2).order == 4);
}

TEST_CASE("non involutions rejected") {
    CHECK_THROWS_AS(decompose(lat({{2}})), NotAnInvolution);
    CHECK_THROWS_AS(decompose(lat({{1, 1}, {0, 1}})), NotAnInvolution);
}

TEST_CASE("conjugates recover multiplicities with a witness") {
    Rng rng(21);
    struct Triple {
        std::size_t nt, ns, np;
    };
    for (Triple m : {Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1},
                     Triple{2, 1, 0}, Triple{1, 2, 1}, Triple{0, 4, 2},
                     Triple{3, 2, 2}, Triple{2, 4, 3}}) {
        std::size_t n = m.nt + m.ns + 2 * m.np;
        for (int rep = 0; rep < 4; ++rep) {
            InvolutionLattice l = random_involution(rng, m.nt, m.ns, m.np, 4 * n);
            C2Decomposition d = decompose(l, true);
            CHECK(d.n_trivial == m.nt);
            CHECK(d.n_sign == m.ns);
            CHECK(d.n_perm == m.np);
            REQUIRE(d.witness.has_value());
            CHECK(is_unimodular(*d.witness));
        }
    }
}

TEST_CASE("component group matches the enumeration oracle") {
    Rng rng(22);
    struct Triple {
        std::size_t nt, ns, np;
    };
    for (Triple m : {Triple{1, 1, 0}, Triple{0, 2, 1}, Triple{2, 3, 1},
                     Triple{1, 4, 2}, Triple{0, 5, 1}}) {
        std::size_t n = m.nt + m.ns + 2 * m.np;
        InvolutionLattice l = random_involution(rng, m.nt, m.ns, m.np, 3 * n);
        ComponentGroup cg = component_group(l);
        OracleResult o = component_group_oracle(l);
        CHECK(cg.order == o.order);
        CHECK(cg.f2_rank == o.f2_rank);
    }
}

TEST_CASE("oracle guard") {
    Rng rng(23);
    InvolutionLattice l = random_involution(rng, 17, 0, 0, 10);
    CHECK_THROWS_AS(component_group_oracle(l), RankGuardExceeded);
}

TEST_CASE("relation invariant factors stay within two") {
    Rng rng(24);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t nt = rng.below(3), ns = rng.below(4), np = rng.below(3);
        if (nt + ns + 2 * np == 0) continue;
        InvolutionLattice l =
            random_involution(rng, nt, ns, np, 3 * (nt + ns + 2 * np));
        ComponentGroup cg = component_group(l);
        CHECK(cg.f2_rank == ns);
        Integer expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), 2, ns);
        CHECK(cg.order == expect);
    }
}

TEST_CASE("representatives are distinct classes") {
    Rng rng(25);
    InvolutionLattice l = random_involution(rng, 1, 3, 1, 18);
    ComponentGroupCtx ctx = component_group_ctx(l);
    REQUIRE(ctx.group.representatives_complete);
    std::vector<std::vector<std::uint8_t>> seen;
    for (const HalfVec& r : ctx.group.representatives) {
        std::vector<std::uint8_t> c = class_coords(ctx, r.num);
        for (const auto& prev : seen) CHECK(prev != c);
        seen.push_back(c);
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("representative cap suppresses materialization") {
    Rng rng(26);
    InvolutionLattice l = random_involution(rng, 0, 3, 0, 12);
    ComponentGroup cg = component_group(l, 2);
    CHECK(cg.f2_rank == 3);
    CHECK(!cg.representatives_complete);
    CHECK(cg.representatives.empty());
    CHECK(cg.generators.size() == 3);
}
