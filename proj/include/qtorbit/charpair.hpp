#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qtorbit/complex.hpp"
#include "qtorbit/lattice.hpp"

namespace qtorbit {

/// Nerve sphere K_P of a simple polytope P together with the characteristic
/// vector λ(v) ∈ ℤⁿ of every nerve vertex (↔ facet of P).
struct CharacteristicPair {
  std::uint32_t n = 0;
  SimplicialComplex nerve;
  /// lambda[v] for nerve ground position v.
  std::vector<IntVector> lambda;

  /// Throws DimensionMismatch unless every vertex carries a length-n vector.
  void check_shape() const;
  const IntVector& value(const VertexLabel& v) const;
};

/// λ_L̂ on the prism over the permutohedron for a complex L on n ≥ 2
/// vertices. Bases get (0,…,0,±1); the side facet of S gets (ν_S, 0) when it
/// is special (S ∉ L) and (ν_S, 1) otherwise. Throws GhostVertexInput,
/// FullSimplexInput, BadDimension.
CharacteristicPair build_lambda_hat(const SimplicialComplex& l);

/// Every nerve facet carries a unimodular basis.
bool check_star_condition(const CharacteristicPair& pair);

/// Ground positions v of the nerve with λ(v) ∈ Π.
std::vector<std::uint32_t> special_vertices(const CharacteristicPair& pair, const Hyperplane& pi);

/// Full subcomplex of the nerve on the special vertices.
SimplicialComplex kspec(const CharacteristicPair& pair, const Hyperplane& pi);

/// Weights at the fixed point of a nerve facet: α̂ⱼ with ⟨λᵢ, α̂ⱼ⟩ = δᵢⱼ and
/// their restrictions αⱼ to Π in the coordinates of Pi's basis.
struct TangentData {
  Face facet;
  std::vector<IntVector> lambda;
  std::vector<IntVector> weights;
  std::vector<IntVector> restricted;
};

/// Throws StarConditionViolated when λ is not unimodular on `facet` and
/// DimensionMismatch when `facet` is not an n-element face of the nerve.
TangentData tangent_data(const CharacteristicPair& pair, const Face& facet, const Hyperplane& pi);

/// No nerve facet holds n − 1 special vertices.
bool has_isolated_fixed_points(const CharacteristicPair& pair, const Hyperplane& pi);

/// Same verdict from the tangent weights: every restricted weight at every
/// fixed point is nonzero.
bool isolated_by_weights(const CharacteristicPair& pair, const Hyperplane& pi);

/// Π / (span λ(τ) ∩ Π) torsion-free for every nonempty nerve face τ.
bool has_connected_stabilizers(const CharacteristicPair& pair, const Hyperplane& pi);

/// First nerve face violating the stabilizer condition, if any.
std::optional<Face> disconnected_stabilizer_face(const CharacteristicPair& pair,
                                                 const Hyperplane& pi);

/// j* = n − 2 − dim K_spec.
int general_position_degree(const CharacteristicPair& pair, const Hyperplane& pi);

/// Largest j ≤ n − 1 such that at every nerve facet any n − j of the λ-values
/// include one outside Π.
int general_position_degree_pointwise(const CharacteristicPair& pair, const Hyperplane& pi);

}  // namespace qtorbit
