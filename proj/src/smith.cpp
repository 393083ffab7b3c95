#include "prym/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace prym {

namespace {

// Deterministic pivot choice: smallest nonzero |entry| in the trailing
// submatrix, ties broken row-major.
bool find_pivot(const IntMat& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& x = a(i, j);
            if (x == 0) continue;
            Integer ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithForm smith_normal_form(const IntMat& m) {
    SmithForm s;
    s.d = m;
    s.u = IntMat::identity(m.rows());
    s.v = IntMat::identity(m.cols());
    IntMat& a = s.d;

    const std::size_t bound = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    while (t < bound) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        s.v.swap_cols(t, pj);

        for (;;) {
            // Reduce column t, re-pivoting on any nonzero remainder.
            bool column_clear = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0) {
                    a.add_row_multiple(i, t, -q);
                    s.u.add_row_multiple(i, t, -q);
                }
                if (a(i, t) != 0) {
                    a.swap_rows(t, i);
                    s.u.swap_rows(t, i);
                    column_clear = false;
                    break;
                }
            }
            if (!column_clear) continue;

            bool row_clear = true;
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0) {
                    a.add_col_multiple(j, t, -q);
                    s.v.add_col_multiple(j, t, -q);
                }
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    s.v.swap_cols(t, j);
                    row_clear = false;
                    break;
                }
            }
            if (!row_clear) continue;

            // Clearing the row can only have disturbed the column when a
            // swap happened, and swaps restart the loop, so both are clear
            // here. Enforce divisibility of the trailing block by the pivot.
            bool fixed = false;
            for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < a.cols() && !fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        s.u.add_row_multiple(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (a(t, t) < 0) {
            a.negate_row(t);
            s.u.negate_row(t);
        }
        ++t;
    }
    s.rank = t;
    return s;
}

IntMat kernel_basis(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    std::vector<std::size_t> idx;
    for (std::size_t j = s.rank; j < m.cols(); ++j) idx.push_back(j);
    return s.v.columns(idx);
}

CokernelInvariants cokernel_invariants(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    CokernelInvariants c;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.d(i, i) > 1) c.torsion.push_back(s.d(i, i));
    c.free_rank = m.rows() - s.rank;
    return c;
}

std::size_t rank_of(const IntMat& m) { return smith_normal_form(m).rank; }

std::optional<IntMat> solve_exact(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
    SmithForm s = smith_normal_form(a);
    IntMat c = s.u * b;
    IntMat y(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < s.rank; ++i) {
            Integer q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c(i, j).get_mpz_t(),
                        s.d(i, i).get_mpz_t());
            if (r != 0) return std::nullopt;
            y(i, j) = q;
        }
        for (std::size_t i = s.rank; i < a.rows(); ++i)
            if (c(i, j) != 0) return std::nullopt;
    }
    return s.v * y;
}

bool is_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) return false;
    Integer d = m.determinant();
    return d == 1 || d == -1;
}

IntMat inverse_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_unimodular: non-square");
    SmithForm s = smith_normal_form(m);
    if (!s.d.is_identity())
        throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
    return s.v * s.u;
}

IntMat complete_saturated_basis(const IntMat& b) {
    const std::size_t n = b.rows(), m = b.cols();
    SmithForm s = smith_normal_form(b);
    if (s.rank != m)
        throw std::invalid_argument("complete_saturated_basis: columns not independent");
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.d(i, i) != 1)
            throw std::invalid_argument("complete_saturated_basis: sublattice not saturated");
    IntMat uinv = inverse_unimodular(s.u);
    std::vector<std::size_t> idx;
    for (std::size_t j = m; j < n; ++j) idx.push_back(j);
    return uinv.columns(idx);
}

} // namespace prym
