#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prym/errors.hpp"
#include "prym/involution.hpp"
#include "prym/oracle.hpp"
#include "prym/spectral.hpp"

using namespace prym;

namespace {

Integer pow2(unsigned long e) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
    return v;
}

} // namespace

TEST_CASE("smallest curve") {
    RealCurveData c{3, 2, 1};
    CHECK(c.h() == 1);
    SpectralHomology s = build(c);
    CHECK(s.rank == 18);
    CHECK(s.basis_labels.size() == 18);
    FiberCounts fc = fiber_counts(c);
    CHECK(fc.jacobian_components == 2);
    CHECK(fc.sl2_components == 4);
    CHECK(fc.pgl2_components == 4);
    CHECK(fc.jacobian_rank == 1);
    CHECK(fc.sl2_rank == 2);
    CHECK(fc.pgl2_rank == 2);
}

TEST_CASE("invalid curve data") {
    CHECK_THROWS_AS(validate_curve({1, 2, 1}), InvalidCurveData);
    CHECK_THROWS_AS(validate_curve({3, 0, 1}), InvalidCurveData);
    CHECK_THROWS_AS(validate_curve({3, 1, 1}), InvalidCurveData); // g - k + 1 odd
    CHECK_THROWS_AS(validate_curve({5, 3, 2}), InvalidCurveData); // g - k + 1 odd
    CHECK_THROWS_AS(validate_curve({3, 5, 1}), InvalidCurveData); // Harnack
    CHECK_THROWS_AS(validate_curve({3, 2, 0}), InvalidCurveData);
    CHECK_THROWS_AS(validate_curve({3, 2, 2}), InvalidCurveData); // ell = k
}

TEST_CASE("counts across small curves") {
    struct Case {
        long long g, k, ell;
        unsigned long jac_exp, prym_exp;
    };
    for (Case c : {Case{3, 2, 1, 1, 2}, Case{4, 3, 1, 1, 3}, Case{4, 3, 2, 3, 3},
                   Case{5, 4, 2, 3, 4}, Case{5, 4, 3, 5, 4}, Case{7, 4, 2, 3, 4},
                   Case{6, 5, 1, 1, 5}}) {
        FiberCounts fc = fiber_counts({c.g, c.k, c.ell});
        CAPTURE(c.g);
        CAPTURE(c.k);
        CAPTURE(c.ell);
        CHECK(fc.jacobian_components == pow2(c.jac_exp));
        CHECK(fc.sl2_components == pow2(c.prym_exp));
        CHECK(fc.pgl2_components == pow2(c.prym_exp));
    }
}

TEST_CASE("rank formula and structure checks hold on the valid grid") {
    for (long long g = 3; g <= 7; ++g)
        for (long long k = 1; k <= g + 1; ++k) {
            if ((g - k + 1) % 2 != 0 || k < 2) continue;
            for (long long ell = 1; ell <= k - 1; ++ell) {
                SpectralHomology s = build({g, k, ell});
                CHECK(s.rank == static_cast<std::size_t>(8 * g - 6));
                CHECK(s.i_act * s.i_act == IntMat::identity(s.rank));
                CHECK(s.tau_act * s.tau_act == IntMat::identity(s.rank));
                CHECK(s.i_act * s.tau_act == s.tau_act * s.i_act);
            }
        }
}

TEST_CASE("prym rank bookkeeping") {
    RealCurveData c{5, 2, 1};
    SpectralHomology s = build(c);
    CHECK(s.rank == 34);
    InvolutionLattice prym = prym_lattice(s);
    // Anti-invariants of i: rank 4h + (4g - 8) + 2k = 8 + 12 + 4.
    CHECK(prym.n == 24);
    C2Decomposition d = decompose(prym);
    CHECK(d.n_sign == 2);
    InvolutionLattice pgl2 = pgl2_lattice(s);
    CHECK(pgl2.n == 24);
    CHECK(decompose(pgl2).n_sign == 2);
}

TEST_CASE("jacobian varies with ell while the prym counts do not") {
    long long g = 5, k = 4;
    std::vector<Integer> jac, sl2, pgl2;
    for (long long ell = 1; ell <= k - 1; ++ell) {
        FiberCounts fc = fiber_counts({g, k, ell});
        jac.push_back(fc.jacobian_components);
        sl2.push_back(fc.sl2_components);
        pgl2.push_back(fc.pgl2_components);
    }
    CHECK(jac == std::vector<Integer>{2, 8, 32});
    for (const Integer& v : sl2) CHECK(v == 16);
    for (const Integer& v : pgl2) CHECK(v == 16);
}

TEST_CASE("oracle agrees with the constructed lattices") {
    SpectralHomology s = build({3, 2, 1});
    InvolutionLattice prym = prym_lattice(s);
    REQUIRE(prym.n <= 16);
    CHECK(component_group_oracle(prym).order == 4);
    InvolutionLattice pgl2 = pgl2_lattice(s);
    REQUIRE(pgl2.n <= 16);
    CHECK(component_group_oracle(pgl2).order == 4);
}

TEST_CASE("prym multiplicities") {
    for (auto [g, k, ell] : {std::tuple<long long, long long, long long>{3, 2, 1},
                             {5, 4, 2}, {5, 2, 1}}) {
        SpectralHomology s = build({g, k, ell});
        long long h = RealCurveData{g, k, ell}.h();
        C2Decomposition d = decompose(prym_lattice(s));
        CHECK(d.n_sign == static_cast<std::size_t>(k));
        CHECK(d.n_trivial == static_cast<std::size_t>(k));
        CHECK(d.n_perm == static_cast<std::size_t>(2 * h + 2 * g - 4));
    }
}

TEST_CASE("basis labels name every summand") {
    SpectralHomology s = build({3, 2, 1});
    CHECK(s.basis_labels.front() == "alpha(1,id)");
    CHECK(s.basis_labels.back() == "mu");
    std::size_t gamma = 0, delta = 0;
    for (const std::string& lbl : s.basis_labels) {
        if (lbl.rfind("gamma", 0) == 0) ++gamma;
        if (lbl.rfind("delta", 0) == 0 || lbl.rfind("i_delta", 0) == 0) ++delta;
    }
    // k = 2, ell = 1: one swapped pair plus gamma_ell; the triple on the
    // delta side.
    CHECK(gamma == 3);
    CHECK(delta == 2);
}
