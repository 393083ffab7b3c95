#include "prym/involution.hpp"

#include "prym/errors.hpp"
#include "prym/f2.hpp"
#include "prym/smith.hpp"

namespace prym {

std::optional<InvolutionViolation> validate(const InvolutionLattice& l) {
    if (l.t.rows() != l.n || l.t.cols() != l.n)
        return InvolutionViolation{0, 0};
    IntMat sq = l.t * l.t;
    for (std::size_t i = 0; i < l.n; ++i)
        for (std::size_t j = 0; j < l.n; ++j)
            if (sq(i, j) != (i == j ? 1 : 0)) return InvolutionViolation{i, j};
    return std::nullopt;
}

void require_involution(const InvolutionLattice& l) {
    if (auto v = validate(l)) throw NotAnInvolution(v->row, v->col);
}

SplitData split(const InvolutionLattice& l) {
    require_involution(l);
    IntMat id = IntMat::identity(l.n);
    SplitData s;
    s.lambda_plus = kernel_basis(l.t - id);
    s.lambda_minus = kernel_basis(l.t + id);
    s.pi_minus_num = id - l.t;
    return s;
}

namespace {

// Normal form of the extension data: basis (Bm | C) of Z^n with
// T*Bm = -Bm and T*C = C + Bm*E, E reduced to an identity block mod 2 and
// then lifted to exactly that block. Column operations on Bm and C mirror
// the inverse row/column operations on E so the relation is preserved.
struct ExtensionNormalForm {
    IntMat bm, c, e;
    std::size_t perm_rank = 0;
};

ExtensionNormalForm extension_normal_form(const InvolutionLattice& l, const SplitData& sd) {
    ExtensionNormalForm nf;
    nf.bm = sd.lambda_minus;
    nf.c = complete_saturated_basis(nf.bm);
    auto e = solve_exact(nf.bm, l.t * nf.c - nf.c);
    if (!e)
        throw InternalInconsistency("invariant-lift difference does not lie in the "
                                    "anti-invariant sublattice");
    nf.e = *e;
    const std::size_t m = nf.e.rows(), p = nf.e.cols();

    std::size_t r = 0;
    while (r < m && r < p) {
        // Odd pivot search, row-major.
        std::size_t pi = m, pj = p;
        for (std::size_t i = r; i < m && pi == m; ++i)
            for (std::size_t j = r; j < p; ++j)
                if (mpz_odd_p(nf.e(i, j).get_mpz_t())) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) break;
        nf.e.swap_rows(r, pi);
        nf.bm.swap_cols(r, pi);
        nf.e.swap_cols(r, pj);
        nf.c.swap_cols(r, pj);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && mpz_odd_p(nf.e(i, r).get_mpz_t())) {
                nf.e.add_row_multiple(i, r, 1);
                nf.bm.add_col_multiple(r, i, -1);
            }
        for (std::size_t j = 0; j < p; ++j)
            if (j != r && mpz_odd_p(nf.e(r, j).get_mpz_t())) {
                nf.e.add_col_multiple(j, r, 1);
                nf.c.add_col_multiple(j, r, 1);
            }
        ++r;
    }
    nf.perm_rank = r;

    // Everything off the identity pattern is now even; shift the lift of C
    // to make E exactly the pattern.
    IntMat e0(m, p);
    for (std::size_t i = 0; i < r; ++i) e0(i, i) = 1;
    IntMat x = e0 - nf.e;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            if (mpz_odd_p(x(i, j).get_mpz_t()))
                throw InternalInconsistency("extension matrix not even off its pivot block");
            x(i, j) /= 2;
        }
    nf.c = nf.c - nf.bm * x;
    nf.e = e0;
    if (!(l.t * nf.c == nf.c + nf.bm * nf.e) || !(l.t * nf.bm == -nf.bm))
        throw InternalInconsistency("extension normal form lost its defining relation");
    return nf;
}

IntMat expected_block_diagonal(std::size_t nt, std::size_t ns, std::size_t np) {
    IntMat b(nt + ns + 2 * np, nt + ns + 2 * np);
    std::size_t at = 0;
    for (std::size_t i = 0; i < nt; ++i, ++at) b(at, at) = 1;
    for (std::size_t i = 0; i < ns; ++i, ++at) b(at, at) = -1;
    for (std::size_t i = 0; i < np; ++i, at += 2) {
        b(at, at + 1) = 1;
        b(at + 1, at) = 1;
    }
    return b;
}

} // namespace

C2Decomposition decompose(const InvolutionLattice& l, bool want_witness) {
    require_involution(l);
    SplitData sd = split(l);
    const std::size_t sp = sd.lambda_plus.cols();
    const std::size_t sm = sd.lambda_minus.cols();
    const std::size_t c = f2_rank_of(l.t + IntMat::identity(l.n));
    if (c > sm || c > sp)
        throw InternalInconsistency("mod-2 rank exceeds an eigenlattice rank");
    C2Decomposition d;
    d.n_perm = c;
    d.n_sign = sm - c;
    d.n_trivial = sp - c;
    if (d.n_trivial + d.n_sign + 2 * d.n_perm != l.n)
        throw InternalInconsistency("multiplicities do not add up to the rank");

    // Independent route through the component group order.
    ComponentGroup g = component_group(l, 0);
    if (g.f2_rank != d.n_sign)
        throw InternalInconsistency("component-group rank disagrees with the "
                                    "multiplicity count");

    if (want_witness) {
        ExtensionNormalForm nf = extension_normal_form(l, sd);
        if (nf.perm_rank != c)
            throw InternalInconsistency("extension rank disagrees with the mod-2 route");
        const std::size_t m = sm, p = l.n - sm;
        IntMat w(l.n, l.n);
        std::size_t at = 0;
        auto put = [&](const IntMat& src, std::size_t j) {
            for (std::size_t i = 0; i < l.n; ++i) w(i, at) = src(i, j);
            ++at;
        };
        for (std::size_t j = c; j < p; ++j) put(nf.c, j);
        for (std::size_t j = c; j < m; ++j) put(nf.bm, j);
        for (std::size_t j = 0; j < c; ++j) {
            put(nf.c, j);
            for (std::size_t i = 0; i < l.n; ++i) w(i, at) = nf.c(i, j) + nf.bm(i, j);
            ++at;
        }
        IntMat conj = inverse_unimodular(w) * l.t * w;
        if (conj != expected_block_diagonal(d.n_trivial, d.n_sign, d.n_perm))
            throw InternalInconsistency("witness conjugation is not the expected "
                                        "block diagonal");
        d.witness = std::move(w);
    }
    return d;
}

ComponentGroupCtx component_group_ctx(const InvolutionLattice& l, std::size_t materialize_cap) {
    require_involution(l);
    ComponentGroupCtx ctx;
    IntMat id = IntMat::identity(l.n);
    ctx.lambda_minus = kernel_basis(l.t + id);
    const std::size_t s = ctx.lambda_minus.cols();

    // The group is the anti-invariant lattice modulo the image of (I - T);
    // rewrite that image in the basis of the anti-invariant lattice and read
    // everything off the relation matrix's Smith form.
    auto rel = solve_exact(ctx.lambda_minus, id - l.t);
    if (!rel)
        throw InternalInconsistency("anti-invariant projections do not lie in the "
                                    "anti-invariant sublattice");
    SmithForm sf = smith_normal_form(*rel);
    if (sf.rank != s)
        throw InternalInconsistency("component group has positive free rank");
    for (std::size_t i = 0; i < sf.rank; ++i)
        if (sf.d(i, i) != 1 && sf.d(i, i) != 2)
            throw InternalInconsistency("component group has an invariant factor "
                                        "other than 1 or 2");
    ctx.uc = sf.u;
    for (std::size_t i = 0; i < sf.rank; ++i)
        if (sf.d(i, i) == 2) ctx.two_positions.push_back(i);

    ComponentGroup& g = ctx.group;
    g.f2_rank = ctx.two_positions.size();
    mpz_ui_pow_ui(g.order.get_mpz_t(), 2, g.f2_rank);

    IntMat uc_inv = inverse_unimodular(sf.u);
    for (std::size_t pos : ctx.two_positions) {
        HalfVec h;
        h.num = ctx.lambda_minus * uc_inv.col_vec(pos);
        g.generators.push_back(std::move(h));
    }

    if (g.f2_rank <= materialize_cap) {
        const std::size_t count = std::size_t{1} << g.f2_rank;
        g.representatives.reserve(count);
        for (std::size_t mask = 0; mask < count; ++mask) {
            HalfVec h;
            h.num.assign(l.n, 0);
            for (std::size_t b = 0; b < g.f2_rank; ++b)
                if (mask >> b & 1)
                    for (std::size_t i = 0; i < l.n; ++i)
                        h.num[i] += g.generators[b].num[i];
            g.representatives.push_back(std::move(h));
        }
        g.representatives_complete = true;
    }
    return ctx;
}

ComponentGroup component_group(const InvolutionLattice& l, std::size_t materialize_cap) {
    return component_group_ctx(l, materialize_cap).group;
}

std::vector<std::uint8_t> class_coords(const ComponentGroupCtx& ctx,
                                       const std::vector<Integer>& lambda) {
    IntMat rhs(lambda.size(), 1);
    for (std::size_t i = 0; i < lambda.size(); ++i) rhs(i, 0) = lambda[i];
    auto y = solve_exact(ctx.lambda_minus, rhs);
    if (!y)
        throw InternalInconsistency("vector is not in the anti-invariant sublattice");
    IntMat z = ctx.uc * *y;
    std::vector<std::uint8_t> coords;
    coords.reserve(ctx.two_positions.size());
    for (std::size_t pos : ctx.two_positions)
        coords.push_back(static_cast<std::uint8_t>(mpz_odd_p(z(pos, 0).get_mpz_t()) ? 1 : 0));
    return coords;
}

} // namespace prym
