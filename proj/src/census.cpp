#include "prym/census.hpp"

#include "prym/errors.hpp"

namespace prym {

namespace {

void require_k(long long k, long long cap) {
    if (k < 1)
        throw InvalidCurveData("at least one real circle is required, got k = " +
                               std::to_string(k));
    if (k > cap)
        throw RankGuardExceeded("census enumeration is capped at k = " +
                                std::to_string(cap) + ", got " + std::to_string(k));
}

Integer pow_int(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

} // namespace

Sl2Census census_sl2(long long k, std::size_t materialize_cap) {
    require_k(k, 30);
    Sl2Census c;
    const std::uint64_t total = std::uint64_t{1} << k;
    std::uint64_t plus_classes = 0;
    bool emit = static_cast<std::size_t>(k) <= materialize_cap;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // Representative of the global-flip orbit: last circle has sign +.
        if (mask >> (k - 1) & 1) continue;
        ++plus_classes;
        if (emit) {
            std::string s = "+I:";
            for (long long j = 0; j < k; ++j) s += (mask >> j & 1) ? '-' : '+';
            c.classes.push_back(std::move(s));
        }
    }
    if (emit) {
        c.classes.push_back("-I");
        c.classes_complete = true;
    }
    c.count = Integer(static_cast<unsigned long>(plus_classes)) + 1;
    return c;
}

namespace {

std::uint64_t count_even_parity_tuples(long long k, std::size_t materialize_cap,
                                       std::vector<std::string>* classes) {
    // Base-3 odometer over per-circle choices, tracking the parity of the
    // nonoriented count incrementally. Digit values: 0 PSU2, 1 oriented,
    // 2 nonoriented.
    std::vector<std::uint8_t> digit(static_cast<std::size_t>(k), 0);
    bool emit = classes && static_cast<std::size_t>(k) <= materialize_cap;
    std::uint64_t even = 0;
    unsigned parity = 0;
    while (true) {
        if (parity == 0) {
            ++even;
            if (emit) {
                std::string s;
                for (std::uint8_t d : digit) s += "SON"[d];
                classes->push_back(std::move(s));
            }
        }
        std::size_t pos = 0;
        while (pos < digit.size()) {
            if (digit[pos] == 2) {
                digit[pos] = 0;
                parity ^= 1;
                ++pos;
            } else {
                ++digit[pos];
                if (digit[pos] == 2) parity ^= 1;
                break;
            }
        }
        if (pos == digit.size()) break;
    }
    return even;
}

Integer dp_even_parity_count(long long k) {
    Integer even = 1, odd = 0;
    for (long long j = 0; j < k; ++j) {
        Integer e2 = 2 * even + odd;
        Integer o2 = 2 * odd + even;
        even = e2;
        odd = o2;
    }
    return even;
}

} // namespace

Pgl2Census census_pgl2(long long k, const Pgl2Options& opt) {
    require_k(k, 30);
    Pgl2Census c;
    c.closed_form = (pow_int(3, static_cast<unsigned long>(k)) + 1) / 2;
    c.trace.push_back(2);
    for (long long j = 2; j <= k; ++j)
        c.trace.push_back(pow_int(3, static_cast<unsigned long>(j - 1)) + c.trace.back());
    c.recursion = c.trace.back();
    if (opt.force_exhaustive || static_cast<std::size_t>(k) <= opt.exhaustive_cap) {
        c.enumeration_method = "exhaustive";
        std::uint64_t n =
            count_even_parity_tuples(k, opt.materialize_cap, &c.classes);
        c.enumeration = Integer(static_cast<unsigned long>(n));
        c.classes_complete = static_cast<std::size_t>(k) <= opt.materialize_cap;
    } else {
        c.enumeration_method = "dp";
        c.enumeration = dp_even_parity_count(k);
    }
    if (c.enumeration != c.closed_form || c.recursion != c.closed_form)
        throw InternalInconsistency("PGL(2) census routes disagree at k = " +
                                    std::to_string(k));
    return c;
}

FiberCompatible fiber_compatible(long long k, long long ell,
                                 std::size_t materialize_cap) {
    require_k(k, 30);
    if (ell < 1 || ell > k - 1)
        throw InvalidCurveData("ell must satisfy 1 <= ell <= k - 1, got ell = " +
                               std::to_string(ell) + " with k = " + std::to_string(k));
    FiberCompatible fc;
    const std::uint64_t total = std::uint64_t{1} << k;
    bool emit = static_cast<std::size_t>(k) <= materialize_cap;
    std::uint64_t all = 0, kept = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++all;
        // Fixed circles (low ell bits): PSU2 or oriented. Swapped circles:
        // oriented or nonoriented; only these can contribute to the parity.
        unsigned nonoriented = 0;
        for (long long j = ell; j < k; ++j) nonoriented += mask >> j & 1;
        if (nonoriented % 2) continue;
        ++kept;
        if (emit) {
            std::string s;
            for (long long j = 0; j < ell; ++j) s += (mask >> j & 1) ? 'O' : 'S';
            for (long long j = ell; j < k; ++j) s += (mask >> j & 1) ? 'N' : 'O';
            fc.classes.push_back(std::move(s));
        }
    }
    fc.pre_parity = Integer(static_cast<unsigned long>(all));
    fc.parity_filtered = Integer(static_cast<unsigned long>(kept));
    fc.classes_complete = emit;
    return fc;
}

ParadoxReport paradox_report(const RealCurveData& c) {
    validate_curve(c);
    ParadoxReport r;
    r.curve = c;
    FiberCounts fiber = fiber_counts(c);
    r.fiber_sl2 = fiber.sl2_components;
    r.fiber_pgl2 = fiber.pgl2_components;
    r.global_sl2 = pow_int(2, static_cast<unsigned long>(c.k - 1)) + 1;
    r.global_pgl2 = (pow_int(3, static_cast<unsigned long>(c.k)) + 1) / 2;
    r.bound = fiber_compatible(c.k, c.ell);
    r.sl2_exceeds = r.global_sl2 > r.fiber_sl2;
    r.pgl2_exceeds = r.global_pgl2 > r.fiber_pgl2;
    return r;
}

} // namespace prym
