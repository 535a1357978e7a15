#include "bwcohom/normal_forms.hpp"

#include <algorithm>
#include <utility>

#include "bwcohom/errors.hpp"

namespace bwc {
namespace {

using Column = std::vector<Integer>;

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// col_dst -= q * col_src on the rows [from, size)
void axpy_neg(Column& dst, const Column& src, const Integer& q, std::size_t from = 0)
{
    for (std::size_t i = from; i < dst.size(); ++i)
        if (sgn(src[i]) != 0) mpz_submul(dst[i].get_mpz_t(), q.get_mpz_t(), src[i].get_mpz_t());
}

void negate(Column& c)
{
    for (auto& v : c) v = -v;
}

std::vector<Column> to_columns(const IntMatrix& m)
{
    std::vector<Column> cols(m.cols(), Column(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cols[j][i] = m(i, j);
    return cols;
}

IntMatrix from_columns(const std::vector<Column>& cols, std::size_t rows)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Integer fdiv(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer tdiv(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct SmithWork {
    IntMatrix a;
    IntMatrix u;
    IntMatrix v;
    bool track;

    void row_axpy(std::size_t dst, std::size_t src, const Integer& q) // row_dst -= q row_src
    {
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(a(src, j)) != 0) mpz_submul(a(dst, j).get_mpz_t(), q.get_mpz_t(), a(src, j).get_mpz_t());
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j)
                if (sgn(u(src, j)) != 0) mpz_submul(u(dst, j).get_mpz_t(), q.get_mpz_t(), u(src, j).get_mpz_t());
    }
    void col_axpy(std::size_t dst, std::size_t src, const Integer& q) // col_dst -= q col_src
    {
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (sgn(a(i, src)) != 0) mpz_submul(a(i, dst).get_mpz_t(), q.get_mpz_t(), a(i, src).get_mpz_t());
        if (track)
            for (std::size_t i = 0; i < v.rows(); ++i)
                if (sgn(v(i, src)) != 0) mpz_submul(v(i, dst).get_mpz_t(), q.get_mpz_t(), v(i, src).get_mpz_t());
    }
    void swap_rows(std::size_t r1, std::size_t r2)
    {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(r1, j), u(r2, j));
    }
    void swap_cols(std::size_t c1, std::size_t c2)
    {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
        if (track)
            for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, c1), v(i, c2));
    }
    void negate_row(std::size_t r)
    {
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }

    void run()
    {
        const std::size_t rows = a.rows(), cols = a.cols();
        const std::size_t n = std::min(rows, cols);
        for (std::size_t t = 0; t < n; ++t) {
            // global minimal pivot in the active block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (sgn(a(i, j)) != 0 && (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (sgn(a(i, t)) == 0) continue;
                    row_axpy(i, t, tdiv(a(i, t), a(t, t)));
                    if (sgn(a(i, t)) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (sgn(a(t, j)) == 0) continue;
                    col_axpy(j, t, tdiv(a(t, j), a(t, t)));
                    if (sgn(a(t, j)) != 0) clean = false;
                }
                if (!clean) {
                    // bring the smallest remainder of the pivot row/column into place
                    std::size_t bi = t, bj = t;
                    for (std::size_t i = t + 1; i < rows; ++i)
                        if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) {
                            bi = i;
                            bj = t;
                        }
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) {
                            bi = t;
                            bj = j;
                        }
                    swap_rows(t, bi);
                    swap_cols(t, bj);
                    continue;
                }
                // pivot must divide the whole remaining block
                std::size_t bad = rows;
                for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                            bad = i;
                            break;
                        }
                if (bad == rows) break;
                row_axpy(t, bad, Integer(-1)); // row_t += row_bad
            }
            if (sgn(a(t, t)) < 0) negate_row(t);
        }
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), true};
    w.run();
    return {std::move(w.u), std::move(w.a), std::move(w.v)};
}

std::vector<Integer> smith_diagonal(const IntMatrix& m)
{
    // A Hermite pass first shrinks the problem to a square-ish echelon block.
    HermiteForm hf = hermite_normal_form(m, false);
    IntMatrix reduced = hf.H.block(0, 0, m.rows(), hf.rank);
    SmithWork w{std::move(reduced), {}, {}, false};
    w.run();
    std::vector<Integer> d;
    for (std::size_t t = 0; t < std::min(w.a.rows(), w.a.cols()); ++t)
        if (sgn(w.a(t, t)) != 0) d.push_back(w.a(t, t));
    return d;
}

HermiteForm hermite_normal_form(const IntMatrix& m, bool with_transform)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Column> c = to_columns(m);
    std::vector<Column> u;
    if (with_transform) {
        u.assign(cols, Column(cols));
        for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
    }
    HermiteForm out;
    std::size_t p = 0;
    for (std::size_t i = 0; i < rows && p < cols; ++i) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = p; j < cols; ++j)
                if (sgn(c[j][i]) != 0 && (best == cols || cmpabs(c[j][i], c[best][i]) < 0)) best = j;
            if (best == cols) break;
            if (best != p) {
                std::swap(c[best], c[p]);
                if (with_transform) std::swap(u[best], u[p]);
            }
            bool done = true;
            for (std::size_t j = p + 1; j < cols; ++j) {
                if (sgn(c[j][i]) == 0) continue;
                Integer q = tdiv(c[j][i], c[p][i]);
                axpy_neg(c[j], c[p], q, i);
                if (with_transform) axpy_neg(u[j], u[p], q);
                if (sgn(c[j][i]) != 0) done = false;
            }
            if (done) break;
        }
        if (sgn(c[p][i]) == 0) continue; // no pivot in this row
        if (sgn(c[p][i]) < 0) {
            negate(c[p]);
            if (with_transform) negate(u[p]);
        }
        for (std::size_t j = 0; j < p; ++j) {
            Integer q = fdiv(c[j][i], c[p][i]);
            if (sgn(q) == 0) continue;
            axpy_neg(c[j], c[p], q, i);
            if (with_transform) axpy_neg(u[j], u[p], q);
        }
        out.pivot_rows.push_back(i);
        ++p;
    }
    out.rank = p;
    out.H = from_columns(c, rows);
    if (with_transform) out.U = from_columns(u, cols);
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    HermiteForm hf = hermite_normal_form(m, true);
    std::vector<std::size_t> keep;
    for (std::size_t j = hf.rank; j < m.cols(); ++j) keep.push_back(j);
    return hf.U.select_columns(keep);
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_integer: row counts differ");
    HermiteForm hf = hermite_normal_form(a, true);
    IntMatrix y(hf.rank, b.cols());
    for (std::size_t col = 0; col < b.cols(); ++col) {
        Column v = b.column(col);
        for (std::size_t k = 0; k < hf.rank; ++k) {
            const std::size_t pr = hf.pivot_rows[k];
            const Integer& piv = hf.H(pr, k);
            if (!mpz_divisible_p(v[pr].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
            Integer q;
            mpz_divexact(q.get_mpz_t(), v[pr].get_mpz_t(), piv.get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t i = pr; i < a.rows(); ++i)
                if (sgn(hf.H(i, k)) != 0) mpz_submul(v[i].get_mpz_t(), q.get_mpz_t(), hf.H(i, k).get_mpz_t());
            y(k, col) = q;
        }
        for (const auto& e : v)
            if (sgn(e) != 0) return std::nullopt;
    }
    std::vector<std::size_t> first;
    for (std::size_t k = 0; k < hf.rank; ++k) first.push_back(k);
    return hf.U.select_columns(first) * y;
}

Lattice Lattice::spanned_by(const IntMatrix& generators)
{
    Lattice l(generators.rows());
    if (generators.cols() == 0) return l;
    HermiteForm hf = hermite_normal_form(generators, false);
    for (std::size_t k = 0; k < hf.rank; ++k) {
        Column col;
        col.pivot = hf.pivot_rows[k];
        for (std::size_t i = col.pivot; i < generators.rows(); ++i)
            if (sgn(hf.H(i, k)) != 0) col.entries.emplace_back(i, hf.H(i, k));
        l.columns_.push_back(std::move(col));
    }
    return l;
}

Lattice Lattice::direct_sum(const std::vector<const Lattice*>& parts)
{
    Lattice l;
    for (const Lattice* part : parts) {
        const std::size_t offset = l.ambient_;
        for (const auto& c : part->columns_) {
            Column shifted{c.pivot + offset, {}};
            shifted.entries.reserve(c.entries.size());
            for (const auto& [row, val] : c.entries) shifted.entries.emplace_back(row + offset, val);
            l.columns_.push_back(std::move(shifted));
        }
        l.ambient_ += part->ambient_;
    }
    return l;
}

void Lattice::reduce(std::vector<Integer>& v) const
{
    if (v.size() != ambient_) throw DimensionMismatch("Lattice::reduce: vector length mismatch");
    Integer q;
    for (const auto& c : columns_) {
        const Integer& piv = c.entries.front().second;
        mpz_fdiv_q(q.get_mpz_t(), v[c.pivot].get_mpz_t(), piv.get_mpz_t());
        if (sgn(q) == 0) continue;
        for (const auto& [row, val] : c.entries) mpz_submul(v[row].get_mpz_t(), q.get_mpz_t(), val.get_mpz_t());
    }
}

bool Lattice::contains(std::vector<Integer> v) const
{
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool Lattice::contains_columns(const IntMatrix& m) const { return !first_outside(m).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> Lattice::first_outside(const IntMatrix& m) const
{
    if (m.rows() != ambient_) throw DimensionMismatch("Lattice: matrix row count mismatch");
    std::vector<Integer> v(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            v[i] = m(i, j);
            any = any || sgn(v[i]) != 0;
        }
        if (!any) continue;
        reduce(v);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (sgn(v[i]) != 0) return std::make_pair(i, j);
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> Lattice::first_outside_difference(const IntMatrix& a,
                                                                                   const IntMatrix& b) const
{
    if (a.rows() != ambient_ || b.rows() != ambient_ || a.cols() != b.cols())
        throw DimensionMismatch("Lattice: matrix shape mismatch");
    std::vector<Integer> v(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < a.rows() && !any; ++i) any = a(i, j) != b(i, j);
        if (!any) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, j) - b(i, j);
        reduce(v);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (sgn(v[i]) != 0) return std::make_pair(i, j);
    }
    return std::nullopt;
}

IntMatrix Lattice::basis() const
{
    IntMatrix b(ambient_, columns_.size());
    for (std::size_t k = 0; k < columns_.size(); ++k)
        for (const auto& [row, val] : columns_[k].entries) b(row, k) = val;
    return b;
}

} // namespace bwc
