#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <vector>

namespace prym {

using Integer = mpz_class;

// Dense row-major matrix over arbitrary-precision integers. Dimensions may
// be zero; a 0xM or Nx0 matrix participates in products with the usual
// conventions.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMat identity(std::size_t n);
    static IntMat zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;

    bool is_zero() const;
    bool is_identity() const;

    IntMat col(std::size_t j) const;            // column as a rows x 1 matrix
    std::vector<Integer> col_vec(std::size_t j) const;
    IntMat columns(const std::vector<std::size_t>& idx) const;
    static IntMat hcat(const IntMat& a, const IntMat& b);

    IntMat mul_vec_as_col(const std::vector<Integer>& v) const; // (*this) * v

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c); // row dst += c*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    // Exact determinant by fraction-free (Bareiss) elimination; square only.
    Integer determinant() const;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> a_;
};

std::vector<Integer> operator*(const IntMat& m, const std::vector<Integer>& v);

} // namespace prym
