#include "prym/random_gen.hpp"

namespace prym {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

UnimodularPair random_unimodular(Rng& rng, std::size_t n, std::size_t ops) {
    UnimodularPair p{IntMat::identity(n), IntMat::identity(n)};
    if (n < 2) return p;
    for (std::size_t step = 0; step < ops; ++step) {
        std::size_t i = rng.below(n), j = rng.below(n);
        while (j == i) j = rng.below(n);
        switch (rng.below(3)) {
        case 0: {
            Integer c(rng.coin() ? rng.range(1, 2) : rng.range(-2, -1));
            p.u.add_row_multiple(i, j, c);
            p.u_inv.add_col_multiple(j, i, -c);
            break;
        }
        case 1:
            p.u.swap_rows(i, j);
            p.u_inv.swap_cols(i, j);
            break;
        default:
            p.u.negate_row(i);
            p.u_inv.negate_col(i);
            break;
        }
    }
    return p;
}

IntMat block_diagonal_involution(std::size_t n_trivial, std::size_t n_sign,
                                 std::size_t n_perm) {
    std::size_t n = n_trivial + n_sign + 2 * n_perm;
    IntMat d(n, n);
    std::size_t at = 0;
    for (std::size_t i = 0; i < n_trivial; ++i, ++at) d(at, at) = 1;
    for (std::size_t i = 0; i < n_sign; ++i, ++at) d(at, at) = -1;
    for (std::size_t i = 0; i < n_perm; ++i, at += 2) {
        d(at, at + 1) = 1;
        d(at + 1, at) = 1;
    }
    return d;
}

InvolutionLattice random_involution(Rng& rng, std::size_t n_trivial,
                                    std::size_t n_sign, std::size_t n_perm,
                                    std::size_t ops) {
    IntMat d = block_diagonal_involution(n_trivial, n_sign, n_perm);
    UnimodularPair p = random_unimodular(rng, d.rows(), ops);
    return InvolutionLattice{d.rows(), p.u * d * p.u_inv};
}

DualPair random_dual_pair(Rng& rng, std::size_t n_trivial, std::size_t n_sign,
                          std::size_t n_perm, std::size_t ops) {
    IntMat t0 = block_diagonal_involution(n_trivial, n_sign, n_perm);
    std::size_t n = t0.rows();
    UnimodularPair u = random_unimodular(rng, n, ops);
    UnimodularPair w = random_unimodular(rng, n, ops);
    DualPair dp;
    dp.primal = InvolutionLattice{n, u.u_inv * t0 * u.u};
    dp.dual = InvolutionLattice{n, w.u_inv * t0.transpose() * w.u};
    dp.p = w.u.transpose() * u.u;
    return dp;
}

} // namespace prym
