#pragma once

#include "prym/int_mat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace prym {

// Dense matrix over the field with two elements. Small sizes only; rows are
// byte vectors, which keeps the elimination code obvious.
class F2Mat {
public:
    F2Mat() : rows_(0), cols_(0) {}
    F2Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static F2Mat from_int(const IntMat& m); // entrywise reduction mod 2
    static F2Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const F2Mat& o) const = default;

    F2Mat operator*(const F2Mat& o) const;
    std::vector<std::uint8_t> mul(const std::vector<std::uint8_t>& v) const;

    std::size_t rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    // Particular solution of A x = b, if any.
    std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& b) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;
};

std::size_t f2_rank_of(const IntMat& m);

} // namespace prym
