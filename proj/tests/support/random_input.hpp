#pragma once

#include "bwcohom/generators.hpp"
#include "bwcohom/integer_matrix.hpp"

namespace oracle {

inline bwc::IntMatrix random_matrix(bwc::Rng& rng, std::size_t rows, std::size_t cols, long lo = -9, long hi = 9)
{
    bwc::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.between(lo, hi);
    return m;
}

/// Mostly zero entries, to reach rank deficiency and large torsion often.
inline bwc::IntMatrix sparse_matrix(bwc::Rng& rng, std::size_t rows, std::size_t cols)
{
    bwc::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.chance(1, 3)) m(i, j) = rng.between(-6, 6);
    return m;
}

} // namespace oracle
