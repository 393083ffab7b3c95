#include "prym/f2.hpp"

#include <stdexcept>

namespace prym {

F2Mat F2Mat::from_int(const IntMat& m) {
    F2Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = static_cast<std::uint8_t>(mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0);
    return r;
}

F2Mat F2Mat::identity(std::size_t n) {
    F2Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

F2Mat F2Mat::operator*(const F2Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("F2Mat: shape mismatch");
    F2Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if ((*this)(i, k))
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) ^= o(k, j);
    return r;
}

std::vector<std::uint8_t> F2Mat::mul(const std::vector<std::uint8_t>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("F2Mat: vector length mismatch");
    std::vector<std::uint8_t> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] ^= (*this)(i, j) & v[j];
    return r;
}

std::size_t F2Mat::rank() const {
    F2Mat m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && !m(p, c)) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(p, j));
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && m(i, c))
                for (std::size_t j = 0; j < cols_; ++j) m(i, j) ^= m(r, j);
        ++r;
    }
    return r;
}

std::optional<std::vector<std::uint8_t>> F2Mat::solve(const std::vector<std::uint8_t>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("F2Mat: rhs length mismatch");
    F2Mat m = *this;
    std::vector<std::uint8_t> rhs = b;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && !m(p, c)) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(p, j));
        std::swap(rhs[r], rhs[p]);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && m(i, c)) {
                for (std::size_t j = 0; j < cols_; ++j) m(i, j) ^= m(r, j);
                rhs[i] ^= rhs[r];
            }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows_; ++i)
        if (rhs[i]) return std::nullopt;
    std::vector<std::uint8_t> x(cols_, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

std::size_t f2_rank_of(const IntMat& m) { return F2Mat::from_int(m).rank(); }

} // namespace prym
