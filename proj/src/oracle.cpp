#include "prym/oracle.hpp"

#include "prym/errors.hpp"

#include <deque>
#include <map>

namespace prym {

namespace {

// Integer column echelon via Euclidean elimination. Pivot search is limited
// to the first row_limit rows so a mirrored identity block can ride along
// underneath. Returns the pivot row of each leading column; pivot columns
// come first with positive pivot entries.
std::vector<std::size_t> echelonize(IntMat& m, std::size_t row_limit) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t r = 0; r < row_limit && next < m.cols(); ++r) {
        while (true) {
            std::size_t best = m.cols();
            for (std::size_t j = next; j < m.cols(); ++j)
                if (m(r, j) != 0 &&
                    (best == m.cols() ||
                     mpz_cmpabs(m(r, j).get_mpz_t(), m(r, best).get_mpz_t()) < 0))
                    best = j;
            if (best == m.cols()) break;
            bool clean = true;
            for (std::size_t j = next; j < m.cols(); ++j) {
                if (j == best || m(r, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, best).get_mpz_t());
                m.add_col_multiple(j, best, -q);
                if (m(r, j) != 0) clean = false;
            }
            if (clean) {
                m.swap_cols(next, best);
                if (m(r, next) < 0) m.negate_col(next);
                pivots.push_back(r);
                ++next;
                break;
            }
        }
    }
    return pivots;
}

// Basis of the integer kernel of a, read off the identity block after
// echelonizing a stacked copy.
IntMat stacked_kernel(const IntMat& a) {
    IntMat s(a.rows() + a.cols(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
    for (std::size_t j = 0; j < a.cols(); ++j) s(a.rows() + j, j) = 1;
    std::size_t lead = echelonize(s, a.rows()).size();
    IntMat k(a.cols(), a.cols() - lead);
    for (std::size_t j = lead; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, j - lead) = s(a.rows() + i, j);
    return k;
}

// Canonical coset representatives modulo the column lattice of a matrix.
class ColLattice {
public:
    explicit ColLattice(IntMat m) : h_(std::move(m)) {
        pivots_ = echelonize(h_, h_.rows());
    }

    std::vector<Integer> residue(std::vector<Integer> v) const {
        for (std::size_t j = 0; j < pivots_.size(); ++j) {
            std::size_t r = pivots_[j];
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), v[r].get_mpz_t(), h_(r, j).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t i = 0; i < h_.rows(); ++i) v[i] -= q * h_(i, j);
        }
        return v;
    }

private:
    IntMat h_;
    std::vector<std::size_t> pivots_;
};

} // namespace

OracleResult component_group_oracle(const InvolutionLattice& l) {
    if (l.n > 16)
        throw RankGuardExceeded("oracle enumeration is capped at rank 16, got " +
                                std::to_string(l.n));
    if (l.t.rows() != l.n || l.t.cols() != l.n || !(l.t * l.t).is_identity())
        throw NotAnInvolution(0, 0);

    IntMat id = IntMat::identity(l.n);
    IntMat gens = stacked_kernel(l.t + id);
    ColLattice rel(id - l.t);

    std::map<std::vector<Integer>, bool> seen;
    std::deque<std::vector<Integer>> queue;
    std::vector<Integer> zero = rel.residue(std::vector<Integer>(l.n));
    seen.emplace(zero, true);
    queue.push_back(zero);
    while (!queue.empty()) {
        std::vector<Integer> v = std::move(queue.front());
        queue.pop_front();
        for (std::size_t g = 0; g < gens.cols(); ++g) {
            std::vector<Integer> w(l.n);
            for (std::size_t i = 0; i < l.n; ++i) w[i] = v[i] + gens(i, g);
            w = rel.residue(std::move(w));
            if (seen.emplace(w, true).second) queue.push_back(w);
        }
    }

    for (const auto& [v, unused] : seen) {
        std::vector<Integer> dbl(l.n);
        for (std::size_t i = 0; i < l.n; ++i) dbl[i] = 2 * v[i];
        if (rel.residue(std::move(dbl)) != zero)
            throw InternalInconsistency("coset enumeration found an element of order "
                                        "above two");
    }

    OracleResult r;
    r.order = Integer(static_cast<unsigned long>(seen.size()));
    std::size_t n = seen.size();
    while (n > 1) {
        if (n % 2 != 0)
            throw InternalInconsistency("coset count is not a power of two");
        n /= 2;
        ++r.f2_rank;
    }
    return r;
}

} // namespace prym
