#pragma once

#include "prym/int_mat.hpp"

#include <optional>
#include <vector>

namespace prym {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
// all diagonal entries nonnegative, zeros trailing.
struct SmithForm {
    IntMat u, d, v;
    std::size_t rank = 0; // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& m);

// Basis of {x : M x = 0} as columns of a cols(M) x dim matrix. The basis
// spans a saturated sublattice (columns of a unimodular matrix).
IntMat kernel_basis(const IntMat& m);

struct CokernelInvariants {
    std::vector<Integer> torsion; // invariant factors > 1, divisibility order
    std::size_t free_rank = 0;
};

// Invariants of Z^rows / (column span of M).
CokernelInvariants cokernel_invariants(const IntMat& m);

std::size_t rank_of(const IntMat& m);

// Particular integer solution of A X = B, if one exists. Unique when A has
// full column rank; otherwise free coordinates are set to zero.
std::optional<IntMat> solve_exact(const IntMat& a, const IntMat& b);

bool is_unimodular(const IntMat& m);

// Inverse of a unimodular matrix (throws std::invalid_argument otherwise).
IntMat inverse_unimodular(const IntMat& m);

// Given the columns of B spanning a saturated rank-m sublattice of Z^n,
// returns C with [B | C] unimodular.
IntMat complete_saturated_basis(const IntMat& b);

} // namespace prym
