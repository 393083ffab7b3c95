#pragma once

#include "prym/duality.hpp"
#include "prym/int_mat.hpp"
#include "prym/involution.hpp"

#include <cstdint>
#include <random>

namespace prym {

// Deterministic RNG. Draws are hand-rolled on top of the mt19937_64 stream
// because standard distributions are not reproducible across library
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound)
    long range(long lo, long hi);             // uniform in [lo, hi]
    bool coin() { return next() & 1; }

private:
    std::mt19937_64 eng_;
};

struct UnimodularPair {
    IntMat u, u_inv;
};

// Product of random elementary row operations with the inverse maintained
// alongside, so conjugation stays exact without a matrix inversion.
UnimodularPair random_unimodular(Rng& rng, std::size_t n, std::size_t ops);

IntMat block_diagonal_involution(std::size_t n_trivial, std::size_t n_sign,
                                 std::size_t n_perm);

// U * D * U^-1 for the block-diagonal involution with the given
// multiplicities.
InvolutionLattice random_involution(Rng& rng, std::size_t n_trivial,
                                    std::size_t n_sign, std::size_t n_perm,
                                    std::size_t ops);

// (T, Tdual, P) with T = U^-1 T0 U, Tdual = W^-1 transpose(T0) W and
// P = transpose(W) U; adjointness holds identically.
DualPair random_dual_pair(Rng& rng, std::size_t n_trivial, std::size_t n_sign,
                          std::size_t n_perm, std::size_t ops);

} // namespace prym
