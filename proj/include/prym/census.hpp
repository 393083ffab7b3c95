#pragma once

#include "prym/int_mat.hpp"
#include "prym/spectral.hpp"

#include <string>
#include <vector>

namespace prym {

// Reports carry the two values present in the literature for the global
// PGL(2) count instead of silently picking one.
inline constexpr const char* kPgl2CountNote =
    "Two values for the global PGL(2) component count appear in the "
    "literature: 3^k + 1 and (3^k + 1)/2. This tool implements "
    "(3^k + 1)/2, the value its own enumeration and recursion reproduce; "
    "the discrepancy is surfaced here rather than silently resolved.";

inline constexpr const char* kSl2NormalizationNote =
    "Sign assignments for h = +I are counted modulo one simultaneous "
    "global flip, assuming the sign can be normalized globally.";

struct Sl2Census {
    Integer count; // 2^(k-1) + 1, from enumeration
    std::vector<std::string> classes;
    bool classes_complete = false;
};

// Classes: per-circle signs modulo a global flip for h = +I, plus the
// single h = -I class.
Sl2Census census_sl2(long long k, std::size_t materialize_cap = 14);

struct Pgl2Options {
    bool force_exhaustive = false; // walk all 3^k tuples regardless of cap
    std::size_t exhaustive_cap = 14;
    std::size_t materialize_cap = 9;
};

struct Pgl2Census {
    Integer enumeration;  // even-parity tuples, exhaustive or dp
    Integer recursion;    // n_k with n_1 = 2, n_k = 3^(k-1) + n_(k-1)
    Integer closed_form;  // (3^k + 1)/2
    std::vector<Integer> trace; // n_1 .. n_k
    std::string enumeration_method; // "exhaustive" or "dp"
    std::vector<std::string> classes; // letters S (PSU2), O (oriented), N (nonoriented)
    bool classes_complete = false;
};

// All three routes are computed and compared; disagreement throws
// InternalInconsistency.
Pgl2Census census_pgl2(long long k, const Pgl2Options& opt = {});

struct FiberCompatible {
    Integer pre_parity;      // product of per-circle choice sets: exactly 2^k
    Integer parity_filtered; // after the even-nonoriented constraint
    std::vector<std::string> classes; // filtered tuples, fixed circles first
    bool classes_complete = false;
};

// Per-circle choices compatible with a fixed Hitchin fiber: tau-fixed
// circles take {PSU2, oriented}, tau-swapped circles {oriented,
// nonoriented}.
FiberCompatible fiber_compatible(long long k, long long ell,
                                 std::size_t materialize_cap = 14);

struct ParadoxReport {
    RealCurveData curve;
    Integer global_sl2, fiber_sl2;
    Integer global_pgl2, fiber_pgl2;
    FiberCompatible bound;
    bool sl2_exceeds = false;
    bool pgl2_exceeds = false; // more global components than fiber classes
};

// Compares the global counts against the per-fiber counts computed from the
// constructed spectral lattices.
ParadoxReport paradox_report(const RealCurveData& c);

} // namespace prym
