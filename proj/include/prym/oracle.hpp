#pragma once

#include "prym/int_mat.hpp"
#include "prym/involution.hpp"

namespace prym {

struct OracleResult {
    Integer order;
    std::size_t f2_rank = 0;
};

// Recomputes the component group by brute-force coset enumeration: reduce
// anti-invariant vectors to canonical residues modulo the image of (I - T)
// and close under generator addition. Shares nothing with the Smith-form
// path. Refuses rank above 16.
OracleResult component_group_oracle(const InvolutionLattice& l);

} // namespace prym
