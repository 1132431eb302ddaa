#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtorbit/complex.hpp"
#include "qtorbit/lattice.hpp"

namespace qtorbit {

/// Sparse integer matrix stored by columns; entries within a column are
/// sorted by row.
struct SparseIntMatrix {
  struct Entry {
    std::uint32_t row;
    std::int64_t value;
  };
  std::size_t rows = 0;
  std::vector<std::vector<Entry>> columns;

  std::size_t cols() const noexcept { return columns.size(); }
  IntegerMatrix to_dense() const;
};

/// Augmented simplicial chain complex of a complex. bases[d + 1] lists the
/// d-faces (d ≥ −1, bases[0] = {∅}); boundaries[k] is ∂_k : C_k → C_{k−1}
/// for k ≥ 0, so boundaries[0] is the augmentation.
struct ChainBoundaryData {
  std::vector<std::vector<Face>> bases;
  std::vector<SparseIntMatrix> boundaries;
};

ChainBoundaryData boundary_data(const SimplicialComplex& k);

/// ∂_{k−1} ∘ ∂_k = 0 for every k, checked exactly.
bool boundary_squares_vanish(const ChainBoundaryData& data);

/// Rank and nontrivial invariant factors (> 1) of an integer matrix.
struct SmithSummary {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

/// Unit pivots are eliminated sparsely first (Markowitz order), the remainder
/// goes through dense Smith reduction. Machine-word arithmetic is overflow
/// checked and the whole reduction restarts in arbitrary precision on
/// overflow.
SmithSummary smith_summary(const SparseIntMatrix& m);

/// ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_t with d₁ | d₂ | … and every dᵢ ≥ 2.
struct AbelianGroup {
  std::uint64_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const noexcept { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Finitely generated abelian group per degree (degrees from −1 up). Only
/// nontrivial degrees are stored, so == decides isomorphism degree by degree.
/// `top_degree` records how far the producer computed and is used only for
/// rendering.
class GradedAbelianGroup {
 public:
  GradedAbelianGroup() = default;
  explicit GradedAbelianGroup(int top_degree) : top_degree_(top_degree) {}

  /// Torsion is brought to divisibility-chain form.
  void set(int degree, AbelianGroup group);
  AbelianGroup at(int degree) const;
  const std::map<int, AbelianGroup>& nontrivial() const noexcept { return groups_; }
  int top_degree() const noexcept { return top_degree_; }
  void set_top_degree(int d) { top_degree_ = d; }

  /// Result R with R[i + s] = this[i].
  GradedAbelianGroup shifted(int s) const;

  /// One line per degree from −1 to top_degree.
  std::string to_string() const;

  friend bool operator==(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
    return a.groups_ == b.groups_;
  }

 private:
  std::map<int, AbelianGroup> groups_;
  int top_degree_ = -1;
};

/// Rewrites any list of cyclic orders as the invariant-factor chain
/// (orders ≤ 1 are dropped).
std::vector<Integer> canonical_torsion(std::vector<Integer> orders);

GradedAbelianGroup reduced_homology(const SimplicialComplex& k);

/// Universal coefficients: H̃^k = free part of H̃_k ⊕ torsion of H̃_{k−1}.
GradedAbelianGroup cohomology_from_homology(const GradedAbelianGroup& homology);

GradedAbelianGroup reduced_cohomology(const SimplicialComplex& k);

/// True iff A[i + shift] ≅ B[i] for every i.
bool groups_equal(const GradedAbelianGroup& a, const GradedAbelianGroup& b, int shift);

}  // namespace qtorbit
