#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qtorbit/vertex_label.hpp"

namespace qtorbit {

/// A simplex as a strictly increasing list of positions in a ground set.
using Face = std::vector<std::uint32_t>;

/// Finite abstract simplicial complex stored by its maximal faces.
///
/// The ground set is kept sorted, so vertex positions follow the global label
/// order and every face (a sorted list of positions) is oriented consistently.
/// Ground elements that lie in no facet are ghost vertices. The complex {∅}
/// has the single facet ∅; there is no void complex.
class SimplicialComplex {
 public:
  /// The complex {∅} on an empty ground set.
  SimplicialComplex();

  /// Checks the contract and normalizes: duplicate or non-maximal facets are
  /// dropped and everything is sorted. Throws DuplicateVertex or
  /// FacetOutsideGround.
  static SimplicialComplex validate(std::vector<VertexLabel> ground,
                                    const std::vector<std::vector<VertexLabel>>& facets);

  /// Index-based construction. `ground` must be duplicate-free (it is sorted
  /// here and the faces remapped); faces may be arbitrary subsets.
  static SimplicialComplex from_faces(std::vector<VertexLabel> ground,
                                      std::vector<Face> faces);

  /// Full simplex on `ground`.
  static SimplicialComplex simplex(std::vector<VertexLabel> ground);
  /// Boundary of the full simplex on `ground` (for one vertex this is {∅}
  /// with a ghost vertex).
  static SimplicialComplex simplex_boundary(std::vector<VertexLabel> ground);
  /// ∂Δⁿ⁻¹ on atoms 1..n.
  static SimplicialComplex sphere_boundary(std::uint32_t n);

  const std::vector<VertexLabel>& ground() const noexcept { return ground_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  std::size_t ground_size() const noexcept { return ground_.size(); }

  /// −1 for {∅}.
  int dimension() const noexcept;
  bool is_empty_complex() const noexcept { return dimension() < 0; }
  /// True iff the complex is the full simplex on its ground set.
  bool is_full_simplex() const noexcept;

  std::optional<std::uint32_t> index_of(const VertexLabel& v) const;
  std::vector<VertexLabel> labels_of(std::span<const std::uint32_t> face) const;

  /// `face` is a sorted list of ground positions.
  bool contains_face(std::span<const std::uint32_t> face) const;

  /// Highest apex level used by any label in the ground set (including inside
  /// barycenters), or nullopt if no apex appears.
  std::optional<std::uint32_t> max_apex_level() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex make_normalized(std::vector<VertexLabel>, std::vector<Face>, bool);

  std::vector<VertexLabel> ground_;
  std::vector<Face> facets_;
};

/// counts[k] = number of k-faces; trailing zeros trimmed; {∅} gives ().
struct FVector {
  std::vector<std::uint64_t> counts;
  friend bool operator==(const FVector&, const FVector&) = default;
};

bool is_face(const SimplicialComplex& k, std::span<const VertexLabel> sigma);

/// All faces grouped by dimension: result[0] = {∅}, result[d + 1] holds the
/// d-faces, each group sorted lexicographically.
std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& k);

FVector f_vector(const SimplicialComplex& k);

/// Throws ApexCollision when `apex` is already in the ground set.
SimplicialComplex cone(const SimplicialComplex& k, const VertexLabel& apex);

/// k-fold join with S⁰. Apexes are North/South at levels above any apex
/// already present, so iterated suspensions never collide.
SimplicialComplex suspension(const SimplicialComplex& k, std::uint32_t times);

/// Vertices are Bary(σ) for nonempty faces σ; facets are complete flags of
/// facets. Ghost vertices disappear.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Throws VertexNotInGround.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexLabel> w);
/// Index form; `w` holds ground positions.
SimplicialComplex full_subcomplex_by_index(const SimplicialComplex& k,
                                           std::span<const std::uint32_t> w);

/// {I ⊆ ground : ground \ I ∉ K} on the same ground set. Throws
/// FullSimplexInput for Δⁿ⁻¹, BadDimension for an empty ground set and
/// TooLarge beyond 24 vertices.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

/// Every j-subset of the ground set is a face. Vacuously true when j exceeds
/// the ground size.
bool is_j_neighborly(const SimplicialComplex& k, std::uint32_t j);

std::vector<VertexLabel> ghost_vertices(const SimplicialComplex& k);

/// s(K) = Cone K ∪ Δ_V applied `times` times. Throws GhostVertexInput.
SimplicialComplex s_operation(const SimplicialComplex& k, std::uint32_t times);

}  // namespace qtorbit
