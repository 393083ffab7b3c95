#pragma once

#include "prym/f2.hpp"
#include "prym/int_mat.hpp"
#include "prym/involution.hpp"

#include <optional>

namespace prym {

// A lattice with involution, a candidate dual, and a unimodular pairing
// matrix tying them together: <x, y> = y^T P x for x primal, y dual, with
// P T = transpose(Tdual) P.
struct DualPair {
    InvolutionLattice primal, dual;
    IntMat p;
};

// Throws NotAnInvolution, AdjointnessViolation, or MalformedInput.
void validate_dual_pair(const DualPair& dp);

// Tdual = transpose(T), P = identity.
DualPair standard_dual(const InvolutionLattice& l);

Integer pair_value(const DualPair& dp, const std::vector<Integer>& x,
                   const std::vector<Integer>& y);

// Mod-2 pairing induced on the component groups. gram(i, j) pairs primal
// generator i with dual generator j. Construction checks that the value is
// independent of the chosen representatives, over every lattice basis shift.
struct InducedPairing {
    ComponentGroupCtx primal, dual;
    F2Mat gram;
};

InducedPairing induced_pairing(const DualPair& dp);

struct PerfectnessResult {
    bool perfect = false;
    std::size_t rank = 0, dual_rank = 0;
    F2Mat gram;
    std::optional<F2Mat> gram_inverse; // certificate when perfect
    // Failure witnesses: generator masks of a class pairing trivially with
    // the entire other side.
    std::optional<std::vector<std::uint8_t>> null_class;
    std::optional<std::vector<std::uint8_t>> null_dual_class;
};

inline constexpr std::size_t kPairingRankGuard = 20;

// Two independent routes: invertibility of the gram matrix, and exhibition
// of a partner for every nonzero class on both sides with pair values
// rebuilt from lattice vectors. Disagreement throws InternalInconsistency.
PerfectnessResult verify_perfect(const DualPair& dp);

} // namespace prym
