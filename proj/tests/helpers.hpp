#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "qtorbit/complex.hpp"
#include "qtorbit/homology.hpp"
#include "qtorbit/lattice.hpp"

namespace testing {

using qtorbit::VertexLabel;

inline std::vector<VertexLabel> atoms(std::initializer_list<std::int64_t> ids) {
  std::vector<VertexLabel> out;
  for (auto i : ids) out.push_back(VertexLabel::atom(i));
  return out;
}

inline std::vector<VertexLabel> atom_range(std::int64_t n) {
  std::vector<VertexLabel> out;
  for (std::int64_t i = 1; i <= n; ++i) out.push_back(VertexLabel::atom(i));
  return out;
}

/// Complex on atoms from integer facet lists.
inline qtorbit::SimplicialComplex cx(std::vector<std::int64_t> ground,
                                     std::vector<std::vector<std::int64_t>> facets) {
  std::vector<VertexLabel> g;
  for (auto i : ground) g.push_back(VertexLabel::atom(i));
  std::vector<std::vector<VertexLabel>> f;
  for (const auto& facet : facets) {
    std::vector<VertexLabel> labels;
    for (auto i : facet) labels.push_back(VertexLabel::atom(i));
    f.push_back(std::move(labels));
  }
  return qtorbit::SimplicialComplex::validate(std::move(g), f);
}

inline qtorbit::SimplicialComplex three_points() { return cx({1, 2, 3}, {{1}, {2}, {3}}); }
inline qtorbit::SimplicialComplex s0() { return cx({1, 2}, {{1}, {2}}); }

inline qtorbit::SimplicialComplex rp2() {
  return cx({1, 2, 3, 4, 5, 6}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                                 {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

/// Graded group from {degree: (rank, torsion)}.
inline qtorbit::GradedAbelianGroup graded(
    std::map<int, std::pair<std::uint64_t, std::vector<long>>> entries) {
  qtorbit::GradedAbelianGroup g;
  for (const auto& [d, value] : entries) {
    qtorbit::AbelianGroup a;
    a.rank = value.first;
    for (auto t : value.second) a.torsion.emplace_back(t);
    g.set(d, a);
  }
  return g;
}

inline qtorbit::IntVector iv(std::initializer_list<long> xs) {
  qtorbit::IntVector out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline qtorbit::IntegerMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<qtorbit::IntVector> r;
  for (auto row : rows) r.push_back(iv(row));
  return qtorbit::IntegerMatrix(r);
}

}  // namespace testing
