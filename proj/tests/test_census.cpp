#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prym/census.hpp"
#include "prym/errors.hpp"

#include <set>

using namespace prym;

TEST_CASE("smallest circle counts") {
    Sl2Census s1 = census_sl2(1);
    CHECK(s1.count == 2);
    Pgl2Census p1 = census_pgl2(1);
    CHECK(p1.enumeration == 2);
    CHECK(p1.recursion == 2);
    CHECK(p1.closed_form == 2);

    Sl2Census s2 = census_sl2(2);
    CHECK(s2.count == 3);
    Pgl2Census p2 = census_pgl2(2);
    CHECK(p2.enumeration == 5);
    CHECK(p2.recursion == 5);
    CHECK(p2.closed_form == 5);
}

TEST_CASE("recursion trace") {
    Pgl2Census p = census_pgl2(5);
    CHECK(p.recursion == 122);
    REQUIRE(p.trace.size() == 5);
    CHECK(p.trace[0] == 2);
    CHECK(p.trace[1] == 5);
    CHECK(p.trace[2] == 14);
    CHECK(p.trace[3] == 41);
    CHECK(p.trace[4] == 122);
}

TEST_CASE("sl2 count formula") {
    Integer expect = 2;
    for (long long k = 1; k <= 12; ++k) {
        Sl2Census s = census_sl2(k, 0);
        CHECK(s.count == expect);
        expect = 2 * expect - 1; // 2^(k-1) + 1 steps to 2^k + 1
    }
    CHECK(census_sl2(4).count == 9);
}

TEST_CASE("pgl2 routes agree") {
    for (long long k = 1; k <= 12; ++k) {
        Pgl2Census p = census_pgl2(k);
        CHECK(p.enumeration == p.recursion);
        CHECK(p.recursion == p.closed_form);
        CHECK(p.enumeration_method == "exhaustive");
    }
    Pgl2Census dp_route = census_pgl2(16);
    CHECK(dp_route.enumeration_method == "dp");
    CHECK(dp_route.enumeration == dp_route.closed_form);
    Pgl2Census forced = census_pgl2(16, Pgl2Options{true, 14, 0});
    CHECK(forced.enumeration_method == "exhaustive");
    CHECK(forced.enumeration == dp_route.enumeration);
}

TEST_CASE("enumerated pgl2 classes have even nonoriented parity") {
    for (long long k : {1, 2, 3, 4, 5, 6}) {
        Pgl2Census p = census_pgl2(k);
        REQUIRE(p.classes_complete);
        std::set<std::string> seen;
        for (const std::string& cls : p.classes) {
            CHECK(cls.size() == static_cast<std::size_t>(k));
            unsigned n = 0;
            for (char ch : cls) {
                CHECK((ch == 'S' || ch == 'O' || ch == 'N'));
                if (ch == 'N') ++n;
            }
            CHECK(n % 2 == 0);
            seen.insert(cls);
        }
        CHECK(seen.size() == p.classes.size());
        CHECK(Integer(static_cast<long>(seen.size())) == p.enumeration);
    }
}

TEST_CASE("sl2 classes are canonical") {
    Sl2Census s = census_sl2(3);
    REQUIRE(s.classes_complete);
    CHECK(s.classes.size() == 5);
    CHECK(s.classes.back() == "-I");
    for (std::size_t i = 0; i + 1 < s.classes.size(); ++i) {
        const std::string& cls = s.classes[i];
        CHECK(cls.rfind("+I:", 0) == 0);
        CHECK(cls.size() == 6);
        CHECK(cls.back() == '+'); // normalization: last circle positive
    }
}

TEST_CASE("fiber compatible choice sets") {
    FiberCompatible f21 = fiber_compatible(2, 1);
    CHECK(f21.pre_parity == 4);
    CHECK(f21.parity_filtered == 2);
    REQUIRE(f21.classes_complete);
    std::set<std::string> classes(f21.classes.begin(), f21.classes.end());
    CHECK(classes == std::set<std::string>{"SO", "OO"});

    FiberCompatible f31 = fiber_compatible(3, 1);
    CHECK(f31.pre_parity == 8);
    CHECK(f31.parity_filtered == 4);
    for (const std::string& cls : f31.classes) {
        CHECK((cls[0] == 'S' || cls[0] == 'O'));
        unsigned n = 0;
        for (char ch : cls)
            if (ch == 'N') ++n;
        CHECK(n % 2 == 0);
    }

    for (long long k = 2; k <= 8; ++k)
        for (long long ell = 1; ell <= k - 1; ++ell) {
            FiberCompatible f = fiber_compatible(k, ell, 0);
            Integer full = 1, half = 1;
            for (long long i = 0; i < k; ++i) full *= 2;
            for (long long i = 0; i + 1 < k; ++i) half *= 2;
            CHECK(f.pre_parity == full);
            CHECK(f.parity_filtered == half);
        }

    CHECK_THROWS_AS(fiber_compatible(3, 3), InvalidCurveData);
    CHECK_THROWS_AS(fiber_compatible(3, 0), InvalidCurveData);
}

TEST_CASE("paradox report flags the overshoot") {
    ParadoxReport pr = paradox_report({3, 2, 1});
    CHECK(pr.global_sl2 == 3);
    CHECK(pr.fiber_sl2 == 4);
    CHECK(pr.global_pgl2 == 5);
    CHECK(pr.fiber_pgl2 == 4);
    CHECK(!pr.sl2_exceeds);
    CHECK(pr.pgl2_exceeds);
    CHECK(pr.bound.parity_filtered == 2);
}

TEST_CASE("census guards") {
    CHECK_THROWS_AS(census_sl2(0), InvalidCurveData);
    CHECK_THROWS_AS(census_pgl2(-1), InvalidCurveData);
    CHECK_THROWS_AS(census_pgl2(31), RankGuardExceeded);
}

TEST_CASE("notes are reported verbatim") {
    CHECK(std::string(kPgl2CountNote).find("3^k + 1") != std::string::npos);
    CHECK(std::string(kPgl2CountNote).find("(3^k + 1)/2") != std::string::npos);
    CHECK(std::string(kSl2NormalizationNote).find("global flip") !=
          std::string::npos);
}
