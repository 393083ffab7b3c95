#include "prym/duality.hpp"

#include "prym/errors.hpp"
#include "prym/smith.hpp"

namespace prym {

void validate_dual_pair(const DualPair& dp) {
    if (dp.primal.n != dp.dual.n || dp.p.rows() != dp.primal.n || dp.p.cols() != dp.primal.n)
        throw MalformedInput(0, "dual pair dimensions disagree");
    require_involution(dp.primal);
    require_involution(dp.dual);
    if (!is_unimodular(dp.p))
        throw AdjointnessViolation("pairing matrix is not unimodular");
    IntMat lhs = dp.p * dp.primal.t;
    IntMat rhs = dp.dual.t.transpose() * dp.p;
    if (lhs != rhs)
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            for (std::size_t j = 0; j < lhs.cols(); ++j)
                if (lhs(i, j) != rhs(i, j))
                    throw AdjointnessViolation(
                        "P T and transpose(Tdual) P differ at entry (" +
                        std::to_string(i) + ", " + std::to_string(j) + ")");
}

DualPair standard_dual(const InvolutionLattice& l) {
    require_involution(l);
    DualPair dp;
    dp.primal = l;
    dp.dual = InvolutionLattice{l.n, l.t.transpose()};
    dp.p = IntMat::identity(l.n);
    return dp;
}

Integer pair_value(const DualPair& dp, const std::vector<Integer>& x,
                   const std::vector<Integer>& y) {
    std::vector<Integer> px = dp.p * x;
    Integer acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) acc += y[i] * px[i];
    return acc;
}

namespace {

std::uint8_t pair_mod2(const DualPair& dp, const std::vector<Integer>& x,
                       const std::vector<Integer>& y) {
    Integer v = pair_value(dp, x, y);
    return static_cast<std::uint8_t>(mpz_odd_p(v.get_mpz_t()) ? 1 : 0);
}

// Representatives differ by elements of (I - T)Z^n; the induced value is
// honest only if every such shift pairs evenly with every generator of the
// other side. The shift lattice is spanned by n columns, so the check is
// finite and complete.
void check_well_defined(const DualPair& dp, const std::vector<HalfVec>& primal_gens,
                        const std::vector<HalfVec>& dual_gens) {
    const std::size_t n = dp.primal.n;
    IntMat shift_p = IntMat::identity(n) - dp.primal.t;
    IntMat shift_d = IntMat::identity(n) - dp.dual.t;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Integer> sp = shift_p.col_vec(j);
        for (const HalfVec& g : dual_gens)
            if (pair_mod2(dp, sp, g.num))
                throw InternalInconsistency("pairing is not constant on primal classes");
        std::vector<Integer> sd = shift_d.col_vec(j);
        for (const HalfVec& g : primal_gens)
            if (pair_mod2(dp, g.num, sd))
                throw InternalInconsistency("pairing is not constant on dual classes");
    }
}

F2Mat gram_from_vectors(const DualPair& dp, const std::vector<HalfVec>& primal_gens,
                        const std::vector<HalfVec>& dual_gens) {
    F2Mat gram(primal_gens.size(), dual_gens.size());
    for (std::size_t i = 0; i < primal_gens.size(); ++i)
        for (std::size_t j = 0; j < dual_gens.size(); ++j)
            gram(i, j) = pair_mod2(dp, primal_gens[i].num, dual_gens[j].num);
    return gram;
}

// For every nonzero mask, the xor of the selected rows must be nonzero.
// Returns the first mask that fails, as generator bits.
std::optional<std::vector<std::uint8_t>> exhibit_partners(const F2Mat& table) {
    const std::size_t r = table.rows();
    std::vector<std::uint32_t> rows(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < table.cols(); ++j)
            if (table(i, j)) rows[i] |= std::uint32_t{1} << j;
    std::vector<std::uint32_t> acc(std::size_t{1} << r, 0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
        acc[mask] = acc[mask & (mask - 1)] ^ rows[low];
        if (acc[mask] == 0) {
            std::vector<std::uint8_t> bits(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                if (mask >> i & 1) bits[i] = 1;
            return bits;
        }
    }
    return std::nullopt;
}

F2Mat transpose_f2(const F2Mat& m) {
    F2Mat t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

std::optional<F2Mat> invert_f2(const F2Mat& m) {
    if (m.rows() != m.cols() || !m.invertible()) return std::nullopt;
    F2Mat inv(m.rows(), m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) {
        std::vector<std::uint8_t> e(m.rows(), 0);
        e[j] = 1;
        auto x = m.solve(e);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < m.rows(); ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

} // namespace

InducedPairing induced_pairing(const DualPair& dp) {
    validate_dual_pair(dp);
    InducedPairing ip;
    ip.primal = component_group_ctx(dp.primal, 0);
    ip.dual = component_group_ctx(dp.dual, 0);
    check_well_defined(dp, ip.primal.group.generators, ip.dual.group.generators);
    ip.gram = gram_from_vectors(dp, ip.primal.group.generators, ip.dual.group.generators);
    return ip;
}

PerfectnessResult verify_perfect(const DualPair& dp) {
    InducedPairing ip = induced_pairing(dp);
    PerfectnessResult res;
    res.rank = ip.primal.group.f2_rank;
    res.dual_rank = ip.dual.group.f2_rank;
    if (res.rank > kPairingRankGuard || res.dual_rank > kPairingRankGuard)
        throw RankGuardExceeded("class enumeration is capped at mod-2 rank " +
                                std::to_string(kPairingRankGuard) + ", got " +
                                std::to_string(std::max(res.rank, res.dual_rank)));
    res.gram = ip.gram;
    bool invertible = ip.gram.rows() == ip.gram.cols() && ip.gram.invertible();

    // Independent route: fresh groups, pair table rebuilt from the lattice
    // vectors, then a partner for every nonzero class on both sides.
    ComponentGroup gp = component_group(dp.primal, 0);
    ComponentGroup gd = component_group(dp.dual, 0);
    F2Mat table = gram_from_vectors(dp, gp.generators, gd.generators);
    res.null_class = exhibit_partners(table);
    res.null_dual_class = exhibit_partners(transpose_f2(table));
    bool exhibited = !res.null_class && !res.null_dual_class &&
                     gp.f2_rank == gd.f2_rank;
    if (invertible != exhibited)
        throw InternalInconsistency("gram invertibility disagrees with partner "
                                    "exhibition");
    res.perfect = invertible;
    if (res.perfect) res.gram_inverse = invert_f2(ip.gram);
    return res;
}

} // namespace prym
