#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qtorbit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows given explicitly; all rows must have equal length.
  explicit IntegerMatrix(const std::vector<IntVector>& rows);

  static IntegerMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors of length `n`.
  static IntegerMatrix from_columns(std::span<const IntVector> columns, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntegerMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  /// Integer grid, one row per line.
  std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U·A·V = D with U, V unimodular and D diagonal, d₁ | d₂ | …, dᵢ ≥ 0.
struct SNFDecomposition {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
};

/// Pivots on the entry of least absolute value (first in row-major order on
/// ties), so the result is reproducible.
SNFDecomposition smith_normal_form(const IntegerMatrix& a);

/// Nonzero diagonal entries of the Smith form, without the transforms.
std::vector<Integer> invariant_factors(IntegerMatrix a);

std::size_t rank(const IntegerMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& a);

/// Exact inverse of a matrix with determinant ±1; throws otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& a);

/// Exactly n vectors of length n with determinant ±1.
bool is_unimodular_basis(std::span<const IntVector> vectors, std::size_t n);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// A basis of the lattice spanned by `generators` (vectors of length n), in
/// column-echelon form with the leading entry of each vector positive.
std::vector<IntVector> lattice_basis(std::span<const IntVector> generators, std::size_t n);

/// Π = Ker p for a primitive covector p, with a fixed basis and the inverse
/// coordinate map. Built once and reused for every saturation test.
class Hyperplane {
 public:
  /// Throws NotPrimitive for a zero or non-primitive covector.
  explicit Hyperplane(IntVector p);

  /// (0, …, 0, 1) in dimension n.
  static Hyperplane last_coordinate(std::size_t n);

  const IntVector& covector() const noexcept { return p_; }
  std::size_t ambient_dimension() const noexcept { return p_.size(); }
  /// n − 1 vectors spanning Π.
  const std::vector<IntVector>& basis() const noexcept { return basis_; }

  bool contains(std::span<const Integer> v) const;
  /// Coordinates of v ∈ Π in basis(); throws NotInHyperplane.
  IntVector coordinates(std::span<const Integer> v) const;
  /// Lattice basis of span(vectors) ∩ Π.
  std::vector<IntVector> intersect(std::span<const IntVector> vectors) const;
  /// True iff Π / span(sub) is torsion-free. Throws NotInHyperplane.
  bool quotient_is_torsion_free(std::span<const IntVector> sub) const;

 private:
  IntVector p_;
  std::vector<IntVector> basis_;
  IntegerMatrix coords_;  // (n−1) × n, coords_ · basis = I
};

std::vector<IntVector> intersect_with_hyperplane(std::span<const IntVector> vectors,
                                                 const IntVector& p);
bool torsion_free_quotient(std::span<const IntVector> sub_basis, const IntVector& p);

std::string to_string(std::span<const Integer> v);

}  // namespace qtorbit
