#pragma once

// Brute-force reference computations used to freeze expected values and to
// cross-check the library. Nothing here calls into the code paths it checks.

#include <cstdint>
#include <vector>

#include "qtorbit/complex.hpp"
#include "qtorbit/lattice.hpp"

namespace oracle {

using qtorbit::Integer;
using qtorbit::IntVector;

/// Every face of K as a bitmask over ground positions, found by testing all
/// subsets of the ground set against the facets (ground ≤ 20).
std::vector<std::uint32_t> all_face_masks(const qtorbit::SimplicialComplex& k);

/// chains[k] = number of chains σ₀ ⊊ … ⊊ σ_k of nonempty faces.
std::vector<std::uint64_t> chain_counts(const qtorbit::SimplicialComplex& k);

/// Rank over ℚ by plain Gaussian elimination with rational entries.
std::size_t rational_rank(const std::vector<std::vector<Integer>>& rows);

/// Boundary matrix ∂_k (k ≥ 0, ∂_0 the augmentation) rebuilt from face masks
/// with the (−1)^position sign rule.
std::vector<std::vector<Integer>> boundary_rows(const qtorbit::SimplicialComplex& k, int degree);

/// Rational Betti numbers of the augmented complex, degrees −1 … dim.
std::vector<std::int64_t> rational_betti(const qtorbit::SimplicialComplex& k);

/// Determinant by cofactor expansion (small matrices only).
Integer laplace_determinant(const std::vector<std::vector<Integer>>& m);

/// gcd of the absolute values of all r × r minors.
Integer gcd_of_minors(const std::vector<std::vector<Integer>>& m, std::size_t r);

/// Alexander dual straight from the definition, as a set of face masks.
std::vector<std::uint32_t> dual_face_masks(const qtorbit::SimplicialComplex& k);

/// v is an integer combination of `basis` (an independent family).
bool in_lattice(const std::vector<IntVector>& basis, const IntVector& v);

/// No v in the box [−bound, bound]ⁿ ∩ Ker p outside W has k·v ∈ W for
/// 2 ≤ k ≤ bound.
bool saturated_by_search(const std::vector<IntVector>& w, const IntVector& p, int bound);

}  // namespace oracle
