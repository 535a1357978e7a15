#pragma once

// Reference computations used to check the library.  Each one takes a
// different route from the code it checks: cofactor expansion instead of
// elimination, brute-force counting instead of normal forms, the normalized
// bar complex and the nondegenerate nerve instead of the full complex.

#include <cstdint>
#include <vector>

#include "bwcohom/abelian.hpp"
#include "bwcohom/fincat.hpp"

namespace oracle {

using bwc::Integer;
using bwc::IntMatrix;

/// Laplace expansion along the first row.
Integer cofactor_determinant(const IntMatrix& m);

/// d_k = gcd of all k x k minors; returns d_k / d_{k-1} for every k with d_k != 0.
std::vector<Integer> determinantal_invariants(const IntMatrix& m);

/// Invariant factors by plain Euclid row/column elimination, no pivot search.
std::vector<Integer> naive_elementary_divisors(IntMatrix m);

std::size_t rational_rank(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, unsigned p);

/// |Hom(Z^rows / column span of m, Z/k)| by enumerating (Z/k)^rows.
std::uint64_t count_homs_to_cyclic(const IntMatrix& m, unsigned k);
/// The same count predicted from invariants: k^rank * prod gcd(d, k).
std::uint64_t predicted_hom_count(const bwc::GroupInvariants& g, unsigned k);

/// Cochain complex of free abelian groups: d[k]: Z^{dims[k]} -> Z^{dims[k+1]}.
struct FreeComplex {
    std::vector<std::size_t> dims;
    std::vector<IntMatrix> d;
};

/// H^k of a free complex with Z coefficients, 0 <= k < d.size().
bwc::GroupInvariants integer_cohomology(const FreeComplex& c, std::size_t k);
/// dim H^k of c tensored with Z/p.
std::size_t mod_p_cohomology(const FreeComplex& c, std::size_t k, unsigned p);

/// Normalized inhomogeneous cochains of Z/n with trivial coefficients, degrees 0..top.
FreeComplex normalized_bar_complex(unsigned n, std::size_t top);

/// Cochains on nondegenerate simplices of the nerve, degrees 0..top.
FreeComplex nerve_complex(const bwc::FiniteCategory& c, std::size_t top);

/// Number of composable chains of length n, by dynamic programming over objects.
std::uint64_t count_chains(const bwc::FiniteCategory& c, std::size_t n);

} // namespace oracle
