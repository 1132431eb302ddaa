#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "qtorbit/complex.hpp"
#include "qtorbit/error.hpp"
#include "qtorbit/homology.hpp"
#include "qtorbit/sampling.hpp"

using namespace qtorbit;
using testing::atoms;
using testing::cx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

SimplicialComplex triangle_boundary() { return SimplicialComplex::sphere_boundary(3); }

}  // namespace

TEST_CASE("validate normalizes facets") {
  auto k = cx({1, 2, 3}, {{1, 2}, {2, 3}, {1, 2}});
  CHECK(k == cx({1, 2, 3}, {{2, 3}, {1, 2}}));
  CHECK(k.facets().size() == 2);

  auto m = cx({1, 2}, {{1}, {1, 2}});
  CHECK(m.facets() == std::vector<Face>{{0, 1}});

  CHECK(code_of([] { cx({1}, {{2}}); }) == ErrorCode::FacetOutsideGround);
  CHECK(code_of([] { cx({1, 1}, {{1}}); }) == ErrorCode::DuplicateVertex);
}

TEST_CASE("validate is idempotent") {
  auto k = cx({3, 1, 2}, {{3, 1}, {1}, {2}});
  auto again = SimplicialComplex::validate(
      k.ground(), [&] {
        std::vector<std::vector<VertexLabel>> f;
        for (const auto& face : k.facets()) f.push_back(k.labels_of(face));
        return f;
      }());
  CHECK(again == k);
}

TEST_CASE("face membership") {
  auto k = triangle_boundary();
  CHECK(is_face(k, atoms({1, 2})));
  CHECK_FALSE(is_face(k, atoms({1, 2, 3})));
  CHECK(is_face(k, {}));
  CHECK(is_face(SimplicialComplex(), {}));
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(triangle_boundary()).counts == std::vector<std::uint64_t>{3, 3});
  CHECK(f_vector(barycentric_subdivision(triangle_boundary())).counts ==
        std::vector<std::uint64_t>{6, 6});
  CHECK(f_vector(SimplicialComplex()).counts.empty());
  CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("cone") {
  const auto c = VertexLabel::apex(ApexTag::Cone, 0);
  auto path = cone(testing::s0(), c);
  CHECK(path.facets().size() == 2);
  CHECK(is_face(path, std::vector{VertexLabel::atom(1), c}));
  CHECK(is_face(path, std::vector{VertexLabel::atom(2), c}));
  auto point = cone(SimplicialComplex(), c);
  CHECK(point.ground() == std::vector{c});
  CHECK(point.dimension() == 0);
  CHECK(f_vector(cone(triangle_boundary(), c)).counts == std::vector<std::uint64_t>{4, 6, 3});
  CHECK(code_of([&] { cone(path, c); }) == ErrorCode::ApexCollision);
}

TEST_CASE("suspension") {
  CHECK(f_vector(suspension(testing::s0(), 1)).counts == std::vector<std::uint64_t>{4, 4});
  CHECK(suspension(triangle_boundary(), 0) == triangle_boundary());
  CHECK(f_vector(suspension(SimplicialComplex(), 1)).counts == std::vector<std::uint64_t>{2});
  CHECK(reduced_homology(suspension(SimplicialComplex(), 3)) == testing::graded({{2, {1, {}}}}));
  CHECK(reduced_homology(suspension(triangle_boundary(), 3)) == testing::graded({{4, {1, {}}}}));
}

TEST_CASE("suspension apexes never collide") {
  auto twice = suspension(suspension(testing::s0(), 1), 1);
  CHECK(twice.ground_size() == 6);
  CHECK(f_vector(twice).counts == f_vector(suspension(testing::s0(), 2)).counts);
}

TEST_CASE("barycentric subdivision") {
  auto hexagon = barycentric_subdivision(triangle_boundary());
  CHECK(hexagon.ground_size() == 6);
  CHECK(f_vector(barycentric_subdivision(cx({1, 2}, {{1, 2}}))).counts ==
        std::vector<std::uint64_t>{3, 2});
  CHECK(f_vector(barycentric_subdivision(cx({1}, {{1}}))).counts == std::vector<std::uint64_t>{1});
  CHECK(barycentric_subdivision(SimplicialComplex()) == SimplicialComplex());
  // Ghost vertex 3 contributes nothing.
  CHECK(barycentric_subdivision(cx({1, 2, 3}, {{1, 2}})).ground_size() == 3);
}

TEST_CASE("full subcomplexes") {
  auto k = triangle_boundary();
  CHECK(full_subcomplex(k, atoms({1, 2})) == cx({1, 2}, {{1, 2}}));
  CHECK(full_subcomplex(k, std::vector<VertexLabel>{}) == SimplicialComplex());
  auto hexagon = barycentric_subdivision(k);
  std::vector<VertexLabel> singles;
  for (const auto& v : hexagon.ground()) {
    if (v.members().size() == 1) singles.push_back(v);
  }
  auto three = full_subcomplex(hexagon, singles);
  CHECK(f_vector(three).counts == std::vector<std::uint64_t>{3});
  CHECK(code_of([&] { full_subcomplex(k, atoms({7})); }) == ErrorCode::VertexNotInGround);
}

TEST_CASE("Alexander duals") {
  auto d = alexander_dual(triangle_boundary());
  CHECK(d.dimension() == -1);
  CHECK(d.ground_size() == 3);
  CHECK(ghost_vertices(d) == atoms({1, 2, 3}));
  CHECK(alexander_dual(testing::three_points()) == testing::three_points());
  auto s0dual = alexander_dual(testing::s0());
  CHECK(s0dual.dimension() == -1);
  CHECK(ghost_vertices(s0dual) == atoms({1, 2}));
  CHECK(code_of([] { alexander_dual(SimplicialComplex::simplex(atoms({1, 2, 3}))); }) ==
        ErrorCode::FullSimplexInput);
}

TEST_CASE("neighborliness and ghosts") {
  CHECK(is_j_neighborly(SimplicialComplex::sphere_boundary(4), 3));
  CHECK_FALSE(is_j_neighborly(testing::three_points(), 2));
  CHECK_FALSE(is_j_neighborly(cx({1, 2}, {{1}}), 1));
  CHECK(is_j_neighborly(cx({1, 2}, {{1}}), 0));
  CHECK(ghost_vertices(triangle_boundary()).empty());
  CHECK(ghost_vertices(cx({1, 2}, {{1}})) == atoms({2}));
}

TEST_CASE("s-operation") {
  auto s = s_operation(testing::s0(), 1);
  CHECK(s.ground_size() == 3);
  CHECK(f_vector(s).counts == std::vector<std::uint64_t>{3, 3});
  CHECK(s.dimension() == 1);
  CHECK(is_face(s, atoms({1, 2})));
  auto s2 = s_operation(testing::s0(), 2);
  CHECK(f_vector(s2).counts == std::vector<std::uint64_t>{4, 6, 4});
  CHECK(reduced_homology(s2) == testing::graded({{2, {1, {}}}}));
  CHECK(s_operation(testing::rp2(), 0) == testing::rp2());
  CHECK(code_of([] { s_operation(cx({1, 2}, {{1}}), 1); }) == ErrorCode::GhostVertexInput);
}

// Properties over seeded random complexes.

TEST_CASE("dual is an involution") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto k = random_complex(static_cast<std::uint32_t>(1 + trial % 7), rng);
    if (k.is_full_simplex()) continue;
    auto d = alexander_dual(k);
    if (d.is_full_simplex()) continue;
    CHECK(alexander_dual(d) == k);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("dual matches the definition") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto k = random_complex(static_cast<std::uint32_t>(1 + trial % 8), rng);
    if (k.is_full_simplex()) continue;
    auto d = alexander_dual(k);
    auto expected = oracle::dual_face_masks(k);
    auto got = oracle::all_face_masks(d);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("subdivision face count equals chain count") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    auto k = random_complex(static_cast<std::uint32_t>(1 + trial % 6), rng);
    if (oracle::all_face_masks(k).size() > 51) continue;  // ≤ 50 nonempty faces
    auto chains = oracle::chain_counts(k);
    auto f = f_vector(barycentric_subdivision(k)).counts;
    REQUIRE(f.size() == chains.size());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == chains[i]);
  }
}

TEST_CASE("s raises neighborliness and acts like suspension") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 120; ++trial) {
    auto k = random_neighborly_complex(static_cast<std::uint32_t>(2 + trial % 5), rng);
    auto s = s_operation(k, 1);
    for (std::uint32_t r = 0; r <= k.ground_size(); ++r) {
      if (is_j_neighborly(k, r)) CHECK(is_j_neighborly(s, r + 1));
    }
    CHECK(reduced_homology(s) == reduced_homology(suspension(k, 1)));
  }
}

TEST_CASE("dual dimension bounds neighborliness") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + trial % 6);
    auto k = random_complex(n, rng);
    if (k.is_full_simplex()) continue;
    const int dim = alexander_dual(k).dimension();
    for (std::uint32_t j = 1; j <= n; ++j) {
      CHECK(is_j_neighborly(k, j) == (dim <= static_cast<int>(n) - 2 - static_cast<int>(j)));
    }
  }
}

TEST_CASE("suspensions compose") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    auto k = random_complex(static_cast<std::uint32_t>(1 + trial % 4), rng);
    const auto a = static_cast<std::uint32_t>(trial % 3);
    const auto b = static_cast<std::uint32_t>(1 + trial % 2);
    CHECK(reduced_homology(suspension(k, a + b)) ==
          reduced_homology(suspension(suspension(k, a), b)));
  }
}
