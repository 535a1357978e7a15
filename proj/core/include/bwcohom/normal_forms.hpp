#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bwcohom/integer_matrix.hpp"

namespace bwc {

struct SmithForm {
    IntMatrix U; ///< unimodular, rows x rows
    IntMatrix S; ///< diagonal with d1 | d2 | ..., nonnegative
    IntMatrix V; ///< unimodular, cols x cols
};

/// S = U * m * V.  Pivot choice is the nonzero entry of minimal absolute
/// value in the active submatrix, which keeps intermediate growth small on
/// the 0/+-1 matrices produced by cochain differentials.
SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith form only (no transforms); the nonzero invariant
/// factors in increasing divisibility order.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

struct HermiteForm {
    IntMatrix H; ///< column-style Hermite normal form, m * U = H
    IntMatrix U; ///< unimodular, cols x cols
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows; ///< pivot row of each of the first `rank` columns
};

/// Column-style HNF: columns [0, rank) are nonzero with strictly increasing
/// pivot rows, positive pivots, zeros above each pivot, and every entry to
/// the left of a pivot reduced into [0, pivot).  Columns [rank, cols) are 0,
/// so the matching columns of U span the integer kernel of m.
HermiteForm hermite_normal_form(const IntMatrix& m, bool with_transform = true);

/// Z-basis of {x : m x = 0}, one basis vector per column.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some integer solution of a * x = b (b may have several columns), or
/// nullopt when none exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Sublattice of Z^n given by an echelon basis.  Used to test membership and
/// to reduce vectors to a canonical coset representative.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t ambient) : ambient_(ambient) {}

    /// Lattice spanned by the columns of `generators`.
    static Lattice spanned_by(const IntMatrix& generators);
    /// Orthogonal sum; the second lattice lives on the trailing coordinates.
    static Lattice direct_sum(const std::vector<const Lattice*>& parts);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return columns_.size(); }
    bool is_zero() const noexcept { return columns_.empty(); }

    /// Reduce v in place: afterwards 0 <= v[p] < pivot at every pivot row p.
    void reduce(std::vector<Integer>& v) const;
    bool contains(std::vector<Integer> v) const;
    /// Every column of m lies in the lattice.
    bool contains_columns(const IntMatrix& m) const;
    /// Index (row, col) of the first column entry of m that survives
    /// reduction, or nullopt if every column lies in the lattice.
    std::optional<std::pair<std::size_t, std::size_t>> first_outside(const IntMatrix& m) const;
    /// first_outside(a - b) without forming the difference.
    std::optional<std::pair<std::size_t, std::size_t>> first_outside_difference(const IntMatrix& a,
                                                                               const IntMatrix& b) const;

    /// The basis as a dense matrix (ambient x rank).
    IntMatrix basis() const;

private:
    struct Column {
        std::size_t pivot;
        std::vector<std::pair<std::size_t, Integer>> entries; // sorted by row, first is the pivot
    };
    std::size_t ambient_ = 0;
    std::vector<Column> columns_;
};

} // namespace bwc
