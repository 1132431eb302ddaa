#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qtorbit/complex.hpp"
#include "qtorbit/lattice.hpp"

namespace qtorbit {

/// Dual sphere of the permutohedron on an n-element ground set: one vertex
/// Bary(S) per proper nonempty S, faces are nested chains.
struct PermutohedralSphere {
  std::uint32_t n = 0;
  SimplicialComplex complex;
  /// subsets[v] is the bitmask (over ground positions) of vertex v.
  std::vector<std::uint32_t> subsets;
};

/// Ground set atoms 1..n. Throws BadDimension for n < 2.
PermutohedralSphere permutohedral_sphere(std::uint32_t n);
/// Subsets of an arbitrary sorted, duplicate-free ground set.
PermutohedralSphere permutohedral_sphere(std::span<const VertexLabel> ground);

/// ν_S = Σ_{i∈S} eᵢ in ℤⁿ⁻¹ with eₙ = −(e₁ + … + eₙ₋₁). `subset` holds
/// 1-based elements. Throws ImproperSubset.
IntVector normal_vector(std::span<const std::uint32_t> subset, std::uint32_t n);
/// Same, with S given as a bitmask over positions 0..n−1.
IntVector normal_vector_mask(std::uint32_t mask, std::uint32_t n);

/// Σ of the permutohedral sphere: the nerve of the prism over the
/// permutohedron. The north apex stands for the base F_a, the south apex for
/// F_b.
SimplicialComplex prism_nerve(std::uint32_t n);
SimplicialComplex prism_nerve(std::span<const VertexLabel> ground);

using Rational = mpq_class;

/// Membership in the permutohedron conv{σ(b)} via the Rado inequalities.
/// Throws NonIncreasingB unless b is strictly increasing.
bool rado_contains(std::span<const Rational> x, std::span<const Rational> b);

/// Bitmasks of the proper nonempty S whose Rado inequality holds with
/// equality at x.
std::vector<std::uint32_t> rado_tight_sets(std::span<const Rational> x,
                                           std::span<const Rational> b);

}  // namespace qtorbit
