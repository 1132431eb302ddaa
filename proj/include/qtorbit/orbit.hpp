#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorbit/charpair.hpp"
#include "qtorbit/complex.hpp"
#include "qtorbit/homology.hpp"

namespace qtorbit {

/// H̃_i(Q) := H̃^{n−i}(K_spec), 0 ≤ i ≤ n + 1. Throws HypothesisFailed unless
/// the restricted action has isolated fixed points and connected stabilizers.
GradedAbelianGroup orbit_homology_alexander(const CharacteristicPair& pair, const Hyperplane& pi);

/// Simplicial model of the union of non-special faces: the full subcomplex of
/// the subdivided nerve on barycenters of faces with a non-special vertex.
SimplicialComplex ynon_model(const CharacteristicPair& pair, const Hyperplane& pi);

/// H̃_i(Q) := H̃_{i−2}(Y_non). With `suspend_model` the model is suspended
/// twice and its homology read off unshifted; otherwise the shift is applied
/// to the homology of the model itself. Same hypotheses as the Alexander
/// route.
GradedAbelianGroup orbit_homology_direct(const CharacteristicPair& pair, const Hyperplane& pi,
                                         bool suspend_model = false);

struct VerifyOptions {
  /// Defaults to (0, …, 0, 1).
  std::optional<IntVector> subtorus;
  /// The direct route runs only when n does not exceed this.
  std::uint32_t direct_max_n = 5;
};

struct OrbitChecks {
  bool star_condition = false;
  bool isolated_fixed_points = false;
  bool isolated_by_weights = false;
  bool connected_stabilizers = false;

  bool hypotheses() const noexcept {
    return star_condition && isolated_fixed_points && connected_stabilizers;
  }
};

struct OrbitVerdicts {
  std::optional<bool> routes_agree;
  bool theorem1_holds = false;
  bool vanishing_low_degrees = false;
  bool vanishing_through_j_star = false;
  std::optional<bool> general_position_at_least_j;
  std::optional<bool> theorem5_holds;

  bool all_hold() const noexcept;
};

struct OrbitReport {
  SimplicialComplex l;
  std::optional<SimplicialComplex> m;
  std::optional<std::uint32_t> j;
  std::uint32_t n = 0;
  IntVector subtorus;
  FVector nerve_f;
  std::size_t special_count = 0;
  OrbitChecks checks;
  int kspec_dim = -1;
  FVector kspec_f;
  int j_star = 0;
  int j_star_pointwise = 0;
  GradedAbelianGroup homology_l;
  std::optional<GradedAbelianGroup> alexander;
  std::optional<GradedAbelianGroup> direct;
  GradedAbelianGroup sigma3_l;
  std::optional<GradedAbelianGroup> sigma_m;  // Σ^{j+2} M for the j-general variant
  OrbitVerdicts verdicts;
};

/// Builds λ_L̂, runs every hypothesis check, computes both routes and fills
/// the verdicts. Throws for invalid L (ghost vertices, full simplex, fewer
/// than two vertices); a false verdict is reported, not thrown.
OrbitReport verify_theorem1(const SimplicialComplex& l, const VerifyOptions& options = {});

/// L := s^{j−1}(M), then verify_theorem1(L) plus j* ≥ j and
/// H̃(Q) ≅ H̃(Σ^{j+2} M). Throws BadDimension for j = 0.
OrbitReport verify_theorem5(const SimplicialComplex& m, std::uint32_t j,
                            const VerifyOptions& options = {});

}  // namespace qtorbit
