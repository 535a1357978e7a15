#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bwc {

using Integer = mpz_class;

/// Dense integer matrix with arbitrary precision entries, stored row-major.
/// Empty shapes (0 x n, n x 0) are legal and behave as zero maps.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix scalar(std::size_t n, const Integer& value);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Integer>& entries() const noexcept { return data_; }

    std::vector<Integer> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Integer>& values);

    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzeros() const;

    IntMatrix transpose() const;
    IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const IntMatrix& b);
    void add_block(std::size_t row0, std::size_t col0, const IntMatrix& b, int sign = 1);
    IntMatrix select_columns(const std::vector<std::size_t>& cols) const;

    /// [A | B]; row counts must agree.
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    /// [A ; B]; column counts must agree.
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
    /// block-diagonal sum
    static IntMatrix block_diagonal(const std::vector<const IntMatrix*>& blocks);

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);
    IntMatrix operator-() const;
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& s, IntMatrix a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination; square matrices only.
Integer determinant(const IntMatrix& m);

} // namespace bwc
