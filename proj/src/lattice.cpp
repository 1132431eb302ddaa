#include "qtorbit/lattice.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qtorbit/error.hpp"

namespace qtorbit {

IntegerMatrix::IntegerMatrix(const std::vector<IntVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::span<const IntVector> columns, std::size_t n) {
  IntegerMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from lattice rank");
    }
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntegerMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntegerMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).get_str();
    }
    os << '\n';
  }
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

namespace {

// Row r ← row r − q·row s, mirrored on the left transform.
void sub_row(IntegerMatrix& m, std::size_t r, std::size_t s, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(m(s, c)) != 0) m(r, c) -= q * m(s, c);
  }
}

void sub_col(IntegerMatrix& m, std::size_t c, std::size_t s, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(m(r, s)) != 0) m(r, c) -= q * m(r, s);
  }
}

// Smith reduction of d in place. When u / v are given they accumulate the
// row / column operations so that u·A·v = d.
void smith_reduce(IntegerMatrix& d, IntegerMatrix* u, IntegerMatrix* v) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  const std::size_t steps = std::min(m, n);
  Integer q;
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (!pivot || mpz_cmpabs(d(i, j).get_mpz_t(), d(pivot->first, pivot->second).get_mpz_t()) < 0) pivot = {i, j};
        }
      }
      if (!pivot) return;
      d.swap_rows(t, pivot->first);
      if (u) u->swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      if (v) v->swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        sub_row(d, i, t, q);
        if (u) sub_row(*u, i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        sub_col(d, j, t, q);
        if (v) sub_col(*v, j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      }
      if (!bad_row) break;
      sub_row(d, t, *bad_row, Integer(-1));
      if (u) sub_row(*u, t, *bad_row, Integer(-1));
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      if (u) {
        for (std::size_t c = 0; c < m; ++c) (*u)(t, c) = -(*u)(t, c);
      }
    }
  }
}

}  // namespace

SNFDecomposition smith_normal_form(const IntegerMatrix& a) {
  SNFDecomposition out{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols())};
  smith_reduce(out.d, &out.u, &out.v);
  return out;
}

std::vector<Integer> invariant_factors(IntegerMatrix a) {
  smith_reduce(a, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (sgn(a(i, i)) != 0) out.push_back(a(i, i));
  }
  return out;
}

std::size_t rank(const IntegerMatrix& a) { return invariant_factors(a).size(); }

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<mpq_class> m(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = mpq_class(a(r, c));
    at(r, n + r) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(at(p, c)) == 0) ++p;
    if (p == n) throw Error(ErrorCode::StarConditionViolated, "matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    }
    const mpq_class pivot = at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(at(r, c)) == 0) continue;
      const mpq_class f = at(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(r, j) -= f * at(c, j);
    }
  }
  IntegerMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& x = at(r, n + c);
      if (x.get_den() != 1) {
        throw Error(ErrorCode::StarConditionViolated, "matrix is not unimodular");
      }
      inv(r, c) = x.get_num();
    }
  }
  return inv;
}

bool is_unimodular_basis(std::span<const IntVector> vectors, std::size_t n) {
  if (vectors.size() != n) return false;
  for (const auto& v : vectors) {
    if (v.size() != n) return false;
  }
  const Integer det = determinant(IntegerMatrix(std::vector<IntVector>(vectors.begin(), vectors.end())));
  return abs(det) == 1;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<IntVector> lattice_basis(std::span<const IntVector> generators, std::size_t n) {
  IntegerMatrix m = IntegerMatrix::from_columns(generators, n);
  const std::size_t k = m.cols();
  std::size_t lead = 0;
  Integer q;
  for (std::size_t r = 0; r < n && lead < k; ++r) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t c = lead; c < k; ++c) {
        if (sgn(m(r, c)) == 0) continue;
        if (!best || mpz_cmpabs(m(r, c).get_mpz_t(), m(r, *best).get_mpz_t()) < 0) best = c;
      }
      if (!best) break;
      m.swap_cols(lead, *best);
      bool clean = true;
      for (std::size_t c = lead + 1; c < k; ++c) {
        if (sgn(m(r, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(), m(r, lead).get_mpz_t());
        sub_col(m, c, lead, q);
        if (sgn(m(r, c)) != 0) clean = false;
      }
      if (clean) {
        if (sgn(m(r, lead)) < 0) {
          for (std::size_t i = 0; i < n; ++i) m(i, lead) = -m(i, lead);
        }
        ++lead;
        break;
      }
    }
  }
  std::vector<IntVector> basis;
  for (std::size_t c = 0; c < lead; ++c) basis.push_back(m.column(c));
  return basis;
}

Hyperplane::Hyperplane(IntVector p) : p_(std::move(p)) {
  const std::size_t n = p_.size();
  Integer g = 0;
  for (const auto& x : p_) g = gcd(g, x);
  if (n == 0 || g != 1) {
    throw Error(ErrorCode::NotPrimitive, "subtorus covector must be primitive");
  }
  IntegerMatrix row(1, n);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = p_[i];
  SNFDecomposition snf = smith_normal_form(row);
  // Columns 1..n−1 of V span Ker p; column 0 is a complement with p·u = ±1.
  std::vector<IntVector> kernel;
  for (std::size_t c = 1; c < n; ++c) kernel.push_back(snf.v.column(c));
  basis_ = lattice_basis(kernel, n);
  std::vector<IntVector> cols = basis_;
  cols.push_back(snf.v.column(0));
  IntegerMatrix inv = unimodular_inverse(IntegerMatrix::from_columns(cols, n));
  coords_ = IntegerMatrix(n - 1, n);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) coords_(r, c) = inv(r, c);
  }
}

Hyperplane Hyperplane::last_coordinate(std::size_t n) {
  IntVector p(n, 0);
  if (n) p.back() = 1;
  return Hyperplane(std::move(p));
}

bool Hyperplane::contains(std::span<const Integer> v) const { return sgn(dot(p_, v)) == 0; }

IntVector Hyperplane::coordinates(std::span<const Integer> v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::NotInHyperplane,
                "vector " + qtorbit::to_string(v) + " is not in the hyperplane");
  }
  IntVector out(coords_.rows());
  for (std::size_t r = 0; r < coords_.rows(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += coords_(r, c) * v[c];
  }
  return out;
}

std::vector<IntVector> Hyperplane::intersect(std::span<const IntVector> vectors) const {
  const std::size_t n = p_.size();
  if (vectors.empty()) return {};
  IntegerMatrix values(1, vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) values(0, i) = dot(p_, vectors[i]);
  if (values.is_zero()) return lattice_basis(vectors, n);
  // Kernel of c ↦ Σ cᵢ p·vᵢ, then pushed forward along the vectors.
  SNFDecomposition snf = smith_normal_form(values);
  std::vector<IntVector> images;
  for (std::size_t c = 1; c < vectors.size(); ++c) {
    IntVector image(n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const Integer& coeff = snf.v(i, c);
      if (sgn(coeff) == 0) continue;
      for (std::size_t r = 0; r < n; ++r) image[r] += coeff * vectors[i][r];
    }
    images.push_back(std::move(image));
  }
  return lattice_basis(images, n);
}

bool Hyperplane::quotient_is_torsion_free(std::span<const IntVector> sub) const {
  if (sub.empty()) return true;
  std::vector<IntVector> coords;
  coords.reserve(sub.size());
  for (const auto& v : sub) coords.push_back(coordinates(v));
  auto factors = invariant_factors(IntegerMatrix::from_columns(coords, p_.size() - 1));
  return std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

std::vector<IntVector> intersect_with_hyperplane(std::span<const IntVector> vectors,
                                                 const IntVector& p) {
  return Hyperplane(p).intersect(vectors);
}

bool torsion_free_quotient(std::span<const IntVector> sub_basis, const IntVector& p) {
  return Hyperplane(p).quotient_is_torsion_free(sub_basis);
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace qtorbit
