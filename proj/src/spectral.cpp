#include "prym/spectral.hpp"

#include "prym/errors.hpp"
#include "prym/smith.hpp"

namespace prym {

void validate_curve(const RealCurveData& c) {
    if (c.g < 2)
        throw InvalidCurveData("genus must be at least 2, got g = " + std::to_string(c.g));
    if (c.k < 1)
        throw InvalidCurveData("at least one real circle is required, got k = " +
                               std::to_string(c.k));
    if (c.k > c.g + 1)
        throw InvalidCurveData("k = " + std::to_string(c.k) +
                               " violates Harnack's bound k <= g + 1");
    if ((c.g - c.k + 1) % 2 != 0)
        throw InvalidCurveData("g - k + 1 = " + std::to_string(c.g - c.k + 1) +
                               " must be even for an integral quotient genus");
    if (c.ell < 1)
        throw InvalidCurveData("ell must be at least 1, got ell = " + std::to_string(c.ell));
    if (c.ell > c.k - 1)
        throw InvalidCurveData("ell must be at most k - 1, got ell = " +
                               std::to_string(c.ell) + " with k = " + std::to_string(c.k));
}

namespace {

// Index layout of the canonical label order. Within a quadruplet the order
// is id, i, tau, itau; within a pair it is id then its partner.
struct Layout {
    std::size_t h, twog4, ell, k;
    std::size_t a_base, b_base, gf_base, gs_base, gell;
    std::size_t df_base, ds_base, dell, idell, mu, total;

    explicit Layout(const RealCurveData& c)
        : h(static_cast<std::size_t>(c.h())),
          twog4(static_cast<std::size_t>(2 * c.g - 4)),
          ell(static_cast<std::size_t>(c.ell)), k(static_cast<std::size_t>(c.k)) {
        a_base = 0;
        b_base = a_base + 8 * h;
        gf_base = b_base + 2 * twog4;
        gs_base = gf_base + 2 * (ell - 1);
        gell = gs_base + 2 * (k - ell);
        df_base = gell + 1;
        ds_base = df_base + 2 * (ell - 1);
        dell = ds_base + 2 * (k - 1 - ell);
        idell = dell + 1;
        mu = dell + 2;
        total = mu + 1;
    }
};

std::vector<std::string> make_labels(const Layout& y) {
    std::vector<std::string> labels;
    labels.reserve(y.total);
    static const char* quad[] = {"id", "i", "tau", "itau"};
    for (std::size_t j = 1; j <= 2 * y.h; ++j)
        for (const char* s : quad)
            labels.push_back("alpha(" + std::to_string(j) + "," + s + ")");
    for (std::size_t j = 1; j <= y.twog4; ++j) {
        labels.push_back("beta(" + std::to_string(j) + ",id)");
        labels.push_back("beta(" + std::to_string(j) + ",tau)");
    }
    for (std::size_t j = 1; j + 1 <= y.ell; ++j) {
        labels.push_back("gamma_fixed(" + std::to_string(j) + ",id)");
        labels.push_back("gamma_fixed(" + std::to_string(j) + ",i)");
    }
    for (std::size_t j = y.ell + 1; j <= y.k; ++j) {
        labels.push_back("gamma_swap(" + std::to_string(j) + ",id)");
        labels.push_back("gamma_swap(" + std::to_string(j) + ",i)");
    }
    labels.push_back("gamma_ell");
    for (std::size_t j = 1; j + 1 <= y.ell; ++j) {
        labels.push_back("delta_fixed(" + std::to_string(j) + ",id)");
        labels.push_back("delta_fixed(" + std::to_string(j) + ",i)");
    }
    for (std::size_t j = y.ell + 1; j + 1 <= y.k; ++j) {
        labels.push_back("delta_swap(" + std::to_string(j) + ",id)");
        labels.push_back("delta_swap(" + std::to_string(j) + ",i)");
    }
    labels.push_back("delta_ell");
    labels.push_back("i_delta_ell");
    labels.push_back("mu");
    return labels;
}

IntMat make_i(const Layout& y) {
    IntMat m(y.total, y.total);
    for (std::size_t j = 0; j < 2 * y.h; ++j) {
        std::size_t a = y.a_base + 4 * j;
        m(a + 1, a) = 1;     // id -> i
        m(a, a + 1) = 1;
        m(a + 3, a + 2) = 1; // tau -> itau
        m(a + 2, a + 3) = 1;
    }
    for (std::size_t j = 0; j < 2 * y.twog4; ++j) m(y.b_base + j, y.b_base + j) = -1;
    for (std::size_t j = 0; j + 1 < y.ell; ++j) {
        std::size_t a = y.gf_base + 2 * j;
        m(a + 1, a) = 1;
        m(a, a + 1) = 1;
    }
    for (std::size_t j = 0; j < y.k - y.ell; ++j) {
        std::size_t a = y.gs_base + 2 * j;
        m(a + 1, a) = 1;
        m(a, a + 1) = 1;
    }
    m(y.gell, y.gell) = -1;
    for (std::size_t j = 0; j + 1 < y.ell; ++j) {
        std::size_t a = y.df_base + 2 * j;
        m(a + 1, a) = 1;
        m(a, a + 1) = 1;
    }
    for (std::size_t j = 0; j + 1 < y.k - y.ell; ++j) {
        std::size_t a = y.ds_base + 2 * j;
        m(a + 1, a) = 1;
        m(a, a + 1) = 1;
    }
    m(y.idell, y.dell) = 1;
    m(y.dell, y.idell) = 1;
    m(y.mu, y.mu) = -1;
    return m;
}

IntMat make_tau(const Layout& y) {
    IntMat m(y.total, y.total);
    for (std::size_t j = 0; j < 2 * y.h; ++j) {
        std::size_t a = y.a_base + 4 * j;
        m(a + 2, a) = 1;     // id -> tau
        m(a, a + 2) = 1;
        m(a + 3, a + 1) = 1; // i -> itau
        m(a + 1, a + 3) = 1;
    }
    for (std::size_t j = 0; j < y.twog4; ++j) {
        std::size_t b = y.b_base + 2 * j;
        m(b + 1, b) = 1;
        m(b, b + 1) = 1;
    }
    for (std::size_t j = 0; j + 1 < y.ell; ++j) {
        std::size_t a = y.gf_base + 2 * j;
        m(a, a) = 1;
        m(a + 1, a + 1) = 1;
    }
    for (std::size_t j = 0; j < y.k - y.ell; ++j) {
        std::size_t a = y.gs_base + 2 * j;
        m(a + 1, a) = 1;
        m(a, a + 1) = 1;
    }
    m(y.gell, y.gell) = 1;
    for (std::size_t j = 0; j + 1 < y.ell; ++j) {
        std::size_t a = y.df_base + 2 * j;
        m(a, a) = -1;
        m(a + 1, a + 1) = -1;
    }
    for (std::size_t j = 0; j + 1 < y.k - y.ell; ++j) {
        std::size_t a = y.ds_base + 2 * j;
        m(a + 1, a) = -1;
        m(a, a + 1) = -1;
    }
    m(y.dell, y.dell) = -1; // delta_ell -> mu - delta_ell
    m(y.mu, y.dell) = 1;
    m(y.idell, y.idell) = -1; // i delta_ell -> -mu - i delta_ell
    m(y.mu, y.idell) = -1;
    m(y.mu, y.mu) = 1;
    return m;
}

void check_structure(const IntMat& i_act, const IntMat& tau_act, std::size_t n) {
    IntMat id = IntMat::identity(n);
    if (!(i_act * i_act == id)) throw InternalInconsistency("i action is not an involution");
    if (!(tau_act * tau_act == id))
        throw InternalInconsistency("tau action is not an involution");
    if (!(i_act * tau_act == tau_act * i_act))
        throw InternalInconsistency("i and tau actions do not commute");
}

} // namespace

SpectralHomology build(const RealCurveData& c) {
    validate_curve(c);
    Layout y(c);
    SpectralHomology s;
    s.curve = c;
    s.rank = y.total;
    if (s.rank != static_cast<std::size_t>(8 * c.g - 6))
        throw InternalInconsistency("label census does not total 8g - 6");
    s.basis_labels = make_labels(y);
    s.i_act = make_i(y);
    s.tau_act = make_tau(y);
    check_structure(s.i_act, s.tau_act, s.rank);
    return s;
}

InvolutionLattice jacobian_lattice(const SpectralHomology& s) {
    return InvolutionLattice{s.rank, s.tau_act};
}

InvolutionLattice prym_lattice(const SpectralHomology& s) {
    IntMat id = IntMat::identity(s.rank);
    IntMat b = kernel_basis(s.i_act + id);
    auto r = solve_exact(b, s.tau_act * b);
    if (!r)
        throw InternalInconsistency("tau does not preserve the anti-invariant "
                                    "sublattice");
    InvolutionLattice l{b.cols(), *r};
    require_involution(l);
    return l;
}

InvolutionLattice pgl2_lattice(const SpectralHomology& s) {
    Layout y(s.curve);
    // Refined model: the basis vector at the mu slot becomes
    // x = (delta_ell + i delta_ell + mu)/2.
    IntMat ip = s.i_act, tp = s.tau_act;
    auto clear_col = [&](IntMat& m, std::size_t j) {
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = 0;
    };
    clear_col(ip, y.mu);
    ip(y.dell, y.mu) = 1;
    ip(y.idell, y.mu) = 1;
    ip(y.mu, y.mu) = -1;
    clear_col(tp, y.dell);
    tp(y.dell, y.dell) = -2;
    tp(y.idell, y.dell) = -1;
    tp(y.mu, y.dell) = 2;
    clear_col(tp, y.idell);
    tp(y.dell, y.idell) = 1;
    tp(y.mu, y.idell) = -2;
    clear_col(tp, y.mu);
    tp(y.dell, y.mu) = -1;
    tp(y.idell, y.mu) = -1;
    tp(y.mu, y.mu) = 1;
    check_structure(ip, tp, s.rank);

    IntMat fixed = kernel_basis(ip - IntMat::identity(s.rank));
    IntMat rest = complete_saturated_basis(fixed);
    IntMat full = IntMat::hcat(fixed, rest);
    IntMat to_coords = inverse_unimodular(full);
    std::size_t f = fixed.cols(), q = s.rank - f;
    IntMat images = to_coords * (tp * rest);
    IntMat tbar(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) tbar(i, j) = images(f + i, j);
    InvolutionLattice l{q, tbar};
    require_involution(l);
    return l;
}

FiberCounts fiber_counts(const RealCurveData& c) {
    SpectralHomology s = build(c);
    ComponentGroup gj = component_group(jacobian_lattice(s), 0);
    ComponentGroup gp = component_group(prym_lattice(s), 0);
    ComponentGroup gq = component_group(pgl2_lattice(s), 0);
    FiberCounts fc;
    fc.jacobian_components = gj.order;
    fc.sl2_components = gp.order;
    fc.pgl2_components = gq.order;
    fc.jacobian_rank = gj.f2_rank;
    fc.sl2_rank = gp.f2_rank;
    fc.pgl2_rank = gq.f2_rank;
    Integer expect_j, expect_k;
    mpz_ui_pow_ui(expect_j.get_mpz_t(), 2, static_cast<unsigned long>(2 * c.ell - 1));
    mpz_ui_pow_ui(expect_k.get_mpz_t(), 2, static_cast<unsigned long>(c.k));
    if (fc.jacobian_components != expect_j)
        throw InternalInconsistency("jacobian component count differs from the "
                                    "closed form 2^(2 ell - 1)");
    if (fc.sl2_components != expect_k)
        throw InternalInconsistency("prym component count differs from the closed "
                                    "form 2^k");
    if (fc.pgl2_components != fc.sl2_components)
        throw InternalInconsistency("pgl2 and prym component counts differ");
    return fc;
}

} // namespace prym
