#include "qtorbit/homology.hpp"

#include <algorithm>
#include <future>
#include <queue>
#include <sstream>

#include "qtorbit/error.hpp"

namespace qtorbit {

IntegerMatrix SparseIntMatrix::to_dense() const {
  IntegerMatrix d(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& e : columns[c]) d(e.row, c) = static_cast<long>(e.value);
  }
  return d;
}

ChainBoundaryData boundary_data(const SimplicialComplex& k) {
  ChainBoundaryData data;
  data.bases = faces_by_dimension(k);
  const std::size_t top = data.bases.size();  // degrees −1 .. top − 2
  Face facet_of;
  for (std::size_t level = 1; level < top; ++level) {
    const auto& faces = data.bases[level];
    const auto& lower = data.bases[level - 1];
    SparseIntMatrix m;
    m.rows = lower.size();
    m.columns.resize(faces.size());
    for (std::size_t c = 0; c < faces.size(); ++c) {
      const Face& f = faces[c];
      auto& column = m.columns[c];
      column.reserve(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        facet_of.assign(f.begin(), f.end());
        facet_of.erase(facet_of.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = std::lower_bound(lower.begin(), lower.end(), facet_of);
        column.push_back({static_cast<std::uint32_t>(it - lower.begin()), i % 2 == 0 ? 1 : -1});
      }
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b) { return a.row < b.row; });
    }
    data.boundaries.push_back(std::move(m));
  }
  return data;
}

bool boundary_squares_vanish(const ChainBoundaryData& data) {
  for (std::size_t k = 1; k < data.boundaries.size(); ++k) {
    const auto& outer = data.boundaries[k - 1];
    const auto& inner = data.boundaries[k];
    for (const auto& column : inner.columns) {
      std::map<std::uint32_t, std::int64_t> acc;
      for (const auto& e : column) {
        for (const auto& g : outer.columns[e.row]) acc[g.row] += e.value * g.value;
      }
      for (const auto& [row, value] : acc) {
        if (value != 0) return false;
      }
    }
  }
  return true;
}

namespace {

struct Overflow {};

// Scalar operations shared by the machine-word and GMP reductions.
struct CheckedWord {
  using T = std::int64_t;
  static T mul_sub(const T& x, const T& f, const T& y) {
    T prod, out;
    if (__builtin_mul_overflow(f, y, &prod) || __builtin_sub_overflow(x, prod, &out)) {
      throw Overflow{};
    }
    return out;
  }
  static T mul(const T& a, const T& b) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static bool is_unit(const T& x) { return x == 1 || x == -1; }
  static bool is_zero(const T& x) { return x == 0; }
  static Integer to_integer(const T& x) { return Integer(static_cast<long>(x)); }
  static T from_word(std::int64_t x) { return x; }
};

struct BigScalar {
  using T = Integer;
  static T mul_sub(const T& x, const T& f, const T& y) { return x - f * y; }
  static T mul(const T& a, const T& b) { return a * b; }
  static bool is_unit(const T& x) { return x == 1 || x == -1; }
  static bool is_zero(const T& x) { return sgn(x) == 0; }
  static Integer to_integer(const T& x) { return x; }
  static T from_word(std::int64_t x) { return Integer(static_cast<long>(x)); }
};

template <class Ops>
SmithSummary eliminate(const SparseIntMatrix& input) {
  using T = typename Ops::T;
  struct Entry {
    std::uint32_t row;
    T value;
  };
  const std::size_t ncols = input.columns.size();
  std::vector<std::vector<Entry>> cols(ncols);
  std::vector<std::vector<std::uint32_t>> row_cols(input.rows);
  std::vector<std::uint32_t> row_count(input.rows, 0);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (const auto& e : input.columns[c]) {
      if (e.value == 0) continue;
      cols[c].push_back({e.row, Ops::from_word(e.value)});
      row_cols[e.row].push_back(static_cast<std::uint32_t>(c));
      ++row_count[e.row];
    }
  }
  std::vector<char> alive(ncols, 1);
  using Key = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    if (!cols[c].empty()) queue.push({cols[c].size(), c});
  }

  SmithSummary out;
  std::vector<Entry> merged;
  while (!queue.empty()) {
    auto [len, c] = queue.top();
    queue.pop();
    if (!alive[c] || cols[c].size() != len || len == 0) continue;
    // Unit entry whose row is shortest.
    std::int64_t pivot_pos = -1;
    for (std::size_t i = 0; i < cols[c].size(); ++i) {
      if (!Ops::is_unit(cols[c][i].value)) continue;
      if (pivot_pos < 0 ||
          row_count[cols[c][i].row] < row_count[cols[c][static_cast<std::size_t>(pivot_pos)].row]) {
        pivot_pos = static_cast<std::int64_t>(i);
      }
    }
    if (pivot_pos < 0) continue;  // parked until the column changes
    const std::uint32_t r = cols[c][static_cast<std::size_t>(pivot_pos)].row;
    const T a = cols[c][static_cast<std::size_t>(pivot_pos)].value;

    std::vector<std::uint32_t> touching;
    touching.swap(row_cols[r]);
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
    for (std::uint32_t other : touching) {
      if (other == c || !alive[other]) continue;
      auto& target = cols[other];
      auto hit = std::lower_bound(target.begin(), target.end(), r,
                                  [](const Entry& e, std::uint32_t row) { return e.row < row; });
      if (hit == target.end() || hit->row != r) continue;
      const T factor = Ops::mul(hit->value, a);  // a⁻¹ = a for a = ±1
      merged.clear();
      merged.reserve(target.size() + cols[c].size());
      auto x = target.begin();
      auto y = cols[c].begin();
      while (x != target.end() || y != cols[c].end()) {
        if (y == cols[c].end() || (x != target.end() && x->row < y->row)) {
          merged.push_back(std::move(*x));
          ++x;
        } else if (x == target.end() || y->row < x->row) {
          T v = Ops::mul_sub(T(0), factor, y->value);
          row_cols[y->row].push_back(other);
          ++row_count[y->row];
          merged.push_back({y->row, std::move(v)});
          ++y;
        } else {
          T v = Ops::mul_sub(x->value, factor, y->value);
          if (Ops::is_zero(v)) {
            --row_count[x->row];
          } else {
            merged.push_back({x->row, std::move(v)});
          }
          ++x;
          ++y;
        }
      }
      target.swap(merged);
      queue.push({target.size(), other});
    }
    for (const auto& e : cols[c]) --row_count[e.row];
    alive[c] = 0;
    cols[c].clear();
    ++out.rank;
  }

  // Dense Smith reduction on whatever has no unit pivot left.
  std::vector<std::uint32_t> rest_cols;
  std::vector<std::int64_t> row_index(input.rows, -1);
  std::size_t nrows = 0;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    if (!alive[c] || cols[c].empty()) continue;
    rest_cols.push_back(c);
    for (const auto& e : cols[c]) {
      if (row_index[e.row] < 0) row_index[e.row] = static_cast<std::int64_t>(nrows++);
    }
  }
  if (!rest_cols.empty()) {
    IntegerMatrix dense(nrows, rest_cols.size());
    for (std::size_t j = 0; j < rest_cols.size(); ++j) {
      for (const auto& e : cols[rest_cols[j]]) {
        dense(static_cast<std::size_t>(row_index[e.row]), j) = Ops::to_integer(e.value);
      }
    }
    for (auto& d : invariant_factors(std::move(dense))) {
      ++out.rank;
      if (d != 1) out.torsion.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace

SmithSummary smith_summary(const SparseIntMatrix& m) {
  try {
    return eliminate<CheckedWord>(m);
  } catch (const Overflow&) {
    return eliminate<BigScalar>(m);
  }
}

std::string AbelianGroup::to_string() const {
  std::string s;
  if (rank) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s.empty() ? "0" : s;
}

std::vector<Integer> canonical_torsion(std::vector<Integer> orders) {
  std::erase_if(orders, [](const Integer& x) { return abs(x) <= 1; });
  if (orders.empty()) return {};
  IntegerMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = abs(orders[i]);
  auto factors = invariant_factors(std::move(diag));
  std::erase_if(factors, [](const Integer& x) { return x == 1; });
  return factors;
}

void GradedAbelianGroup::set(int degree, AbelianGroup group) {
  group.torsion = canonical_torsion(std::move(group.torsion));
  top_degree_ = std::max(top_degree_, degree);
  if (group.is_trivial()) {
    groups_.erase(degree);
  } else {
    groups_[degree] = std::move(group);
  }
}

AbelianGroup GradedAbelianGroup::at(int degree) const {
  auto it = groups_.find(degree);
  return it == groups_.end() ? AbelianGroup{} : it->second;
}

GradedAbelianGroup GradedAbelianGroup::shifted(int s) const {
  GradedAbelianGroup out(top_degree_ + s);
  for (const auto& [d, g] : groups_) out.groups_[d + s] = g;
  return out;
}

std::string GradedAbelianGroup::to_string() const {
  std::ostringstream os;
  int top = top_degree_;
  if (!groups_.empty()) top = std::max(top, groups_.rbegin()->first);
  int low = -1;
  if (!groups_.empty()) low = std::min(low, groups_.begin()->first);
  for (int d = low; d <= top; ++d) os << "H[" << d << "] = " << at(d).to_string() << '\n';
  return os.str();
}

GradedAbelianGroup reduced_homology(const SimplicialComplex& k) {
  const ChainBoundaryData data = boundary_data(k);
  const std::size_t nb = data.boundaries.size();
  // Per-degree reductions are independent; results are gathered in order.
  std::vector<std::future<SmithSummary>> pending;
  pending.reserve(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    const bool big = data.boundaries[i].cols() > 2000;
    pending.push_back(std::async(big ? std::launch::async : std::launch::deferred,
                                 [&data, i] { return smith_summary(data.boundaries[i]); }));
  }
  std::vector<SmithSummary> summaries;
  summaries.reserve(nb);
  for (auto& p : pending) summaries.push_back(p.get());

  const int top = static_cast<int>(data.bases.size()) - 2;
  GradedAbelianGroup h(top);
  for (int d = -1; d <= top; ++d) {
    const std::size_t level = static_cast<std::size_t>(d + 1);
    const std::size_t chains = data.bases[level].size();
    const std::size_t rank_out = d >= 0 ? summaries[static_cast<std::size_t>(d)].rank : 0;
    const std::size_t rank_in = level < nb ? summaries[level].rank : 0;
    AbelianGroup g;
    g.rank = chains - rank_out - rank_in;
    if (level < nb) g.torsion = summaries[level].torsion;
    h.set(d, std::move(g));
  }
  return h;
}

GradedAbelianGroup cohomology_from_homology(const GradedAbelianGroup& homology) {
  GradedAbelianGroup co(homology.top_degree());
  for (const auto& [d, g] : homology.nontrivial()) {
    if (g.rank) {
      AbelianGroup free = co.at(d);
      free.rank += g.rank;
      co.set(d, std::move(free));
    }
    if (!g.torsion.empty()) {
      AbelianGroup tors = co.at(d + 1);
      tors.torsion.insert(tors.torsion.end(), g.torsion.begin(), g.torsion.end());
      co.set(d + 1, std::move(tors));
    }
  }
  co.set_top_degree(homology.top_degree());
  return co;
}

GradedAbelianGroup reduced_cohomology(const SimplicialComplex& k) {
  return cohomology_from_homology(reduced_homology(k));
}

bool groups_equal(const GradedAbelianGroup& a, const GradedAbelianGroup& b, int shift) {
  return a == b.shifted(shift);
}

}  // namespace qtorbit
