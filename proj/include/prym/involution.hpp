#pragma once

#include "prym/int_mat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace prym {

// Z^n with an integral involution T (T*T = identity).
struct InvolutionLattice {
    std::size_t n = 0;
    IntMat t;
};

struct InvolutionViolation {
    std::size_t row = 0, col = 0; // first entry where T*T differs from identity
};

// nullopt when T is a genuine involution on Z^n.
std::optional<InvolutionViolation> validate(const InvolutionLattice& l);
void require_involution(const InvolutionLattice& l); // throws NotAnInvolution

struct SplitData {
    IntMat lambda_plus;   // saturated basis of {x : T x = x}, as columns
    IntMat lambda_minus;  // saturated basis of {x : T x = -x}, as columns
    IntMat pi_minus_num;  // I - T; column j over denominator 2 is the
                          // anti-invariant projection of e_j
};

SplitData split(const InvolutionLattice& l);

// Multiplicities of the three indecomposables: fixed line, negated line,
// swapped pair. witness (optional) is unimodular with witness^-1 T witness
// block diagonal in that order.
struct C2Decomposition {
    std::size_t n_trivial = 0, n_sign = 0, n_perm = 0;
    std::optional<IntMat> witness;
};

C2Decomposition decompose(const InvolutionLattice& l, bool want_witness = false);

// Vector with half-integer coordinates, stored as numerators over 2.
struct HalfVec {
    std::vector<Integer> num;
    bool operator==(const HalfVec& o) const = default;
};

struct ComponentGroup {
    std::size_t f2_rank = 0;
    std::vector<HalfVec> generators;      // f2_rank independent classes
    std::vector<HalfVec> representatives; // all 2^f2_rank classes, first zero
    bool representatives_complete = false;
    Integer order;                        // 2^f2_rank
};

inline constexpr std::size_t kRepresentativeCap = 14;

ComponentGroup component_group(const InvolutionLattice& l,
                               std::size_t materialize_cap = kRepresentativeCap);

// Everything needed to map anti-invariant vectors to their classes.
struct ComponentGroupCtx {
    ComponentGroup group;
    IntMat lambda_minus; // basis B of the anti-invariant sublattice
    IntMat uc;           // row transform of the relation matrix's Smith form
    std::vector<std::size_t> two_positions; // diagonal positions with factor 2
};

ComponentGroupCtx component_group_ctx(const InvolutionLattice& l,
                                      std::size_t materialize_cap = kRepresentativeCap);

// Coordinates of the class of lambda (an anti-invariant integer vector; the
// group element is lambda/2) in the generator basis of ctx.
std::vector<std::uint8_t> class_coords(const ComponentGroupCtx& ctx,
                                       const std::vector<Integer>& lambda);

} // namespace prym
