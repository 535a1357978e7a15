#include "bwcohom/integer_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "bwcohom/errors.hpp"

namespace bwc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw DimensionMismatch("IntMatrix: entry count " + std::to_string(data_.size()) + " != " +
                                std::to_string(rows) + "x" + std::to_string(cols));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, const Integer& value)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const
{
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Integer>& values)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::size_t IntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& v : data_)
        if (sgn(v) != 0) ++n;
    return n;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
{
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionMismatch("IntMatrix::block out of range");
    IntMatrix b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
}

void IntMatrix::set_block(std::size_t row0, std::size_t col0, const IntMatrix& b)
{
    if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) throw DimensionMismatch("IntMatrix::set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

void IntMatrix::add_block(std::size_t row0, std::size_t col0, const IntMatrix& b, int sign)
{
    if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) throw DimensionMismatch("IntMatrix::add_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            const Integer& v = b(i, j);
            if (sgn(v) == 0) continue;
            if (sign >= 0)
                (*this)(row0 + i, col0 + j) += v;
            else
                (*this)(row0 + i, col0 + j) -= v;
        }
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const
{
    IntMatrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
    return s;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack: row counts differ");
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: column counts differ");
    IntMatrix m(a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
}

IntMatrix IntMatrix::block_diagonal(const std::vector<const IntMatrix*>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto* b : blocks) {
        r += b->rows_;
        c += b->cols_;
    }
    IntMatrix m(r, c);
    r = c = 0;
    for (const auto* b : blocks) {
        m.set_block(r, c, *b);
        r += b->rows_;
        c += b->cols_;
    }
    return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("IntMatrix +: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (sgn(o.data_[k]) != 0) data_[k] += o.data_[k];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("IntMatrix -: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (sgn(o.data_[k]) != 0) data_[k] -= o.data_[k];
    return *this;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
}

// Cochain operators are very sparse, so both operands are scanned for
// nonzeros; the right operand is indexed row-wise once per product.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("IntMatrix *: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                                std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    IntMatrix c(a.rows_, b.cols_);
    if (a.empty() || b.empty()) return c;

    std::vector<std::size_t> start(b.rows_ + 1, 0);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < b.rows_; ++k) {
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (sgn(b(k, j)) != 0) idx.push_back(j);
        start[k + 1] = idx.size();
    }
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t p = start[k]; p < start[k + 1]; ++p) {
                const std::size_t j = idx[p];
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    }
    return c;
}

IntMatrix operator*(const Integer& s, IntMatrix a)
{
    for (auto& v : a.data_) v *= s;
    return a;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace bwc
