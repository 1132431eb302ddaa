#include "qtorbit/charpair.hpp"

#include <algorithm>

#include "qtorbit/error.hpp"
#include "qtorbit/permutohedron.hpp"

namespace qtorbit {

void CharacteristicPair::check_shape() const {
  if (lambda.size() != nerve.ground_size()) {
    throw Error(ErrorCode::DimensionMismatch, "every nerve vertex needs a characteristic vector");
  }
  for (const auto& v : lambda) {
    if (v.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "characteristic vector has the wrong length");
    }
  }
}

const IntVector& CharacteristicPair::value(const VertexLabel& v) const {
  auto idx = nerve.index_of(v);
  if (!idx) throw Error(ErrorCode::VertexNotInGround, "no nerve vertex " + v.to_string());
  return lambda.at(*idx);
}

CharacteristicPair build_lambda_hat(const SimplicialComplex& l) {
  if (!ghost_vertices(l).empty()) {
    throw Error(ErrorCode::GhostVertexInput, "L must not have ghost vertices");
  }
  if (l.is_full_simplex()) {
    throw Error(ErrorCode::FullSimplexInput, "L must not be the full simplex");
  }
  const auto n = static_cast<std::uint32_t>(l.ground_size());
  if (n < 2) throw Error(ErrorCode::BadDimension, "L needs at least two vertices");

  PermutohedralSphere sphere = permutohedral_sphere(l.ground());
  CharacteristicPair pair;
  pair.n = n;
  pair.nerve = suspension(sphere.complex, 1);
  // Suspension appends its two apexes after every barycenter.
  const std::size_t sides = sphere.subsets.size();
  pair.lambda.resize(pair.nerve.ground_size());
  Face members;
  for (std::size_t v = 0; v < sides; ++v) {
    const std::uint32_t mask = sphere.subsets[v];
    IntVector value = normal_vector_mask(mask, n);
    members.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    // The side facet of S is special iff [n] \ S ∈ L̂, i.e. iff S ∉ L.
    value.push_back(l.contains_face(members) ? 1 : 0);
    pair.lambda[v] = std::move(value);
  }
  IntVector top(n, 0);
  top.back() = 1;
  pair.lambda[sides] = top;
  top.back() = -1;
  pair.lambda[sides + 1] = top;
  return pair;
}

namespace {

std::vector<IntVector> values_on(const CharacteristicPair& pair, const Face& face) {
  std::vector<IntVector> out;
  out.reserve(face.size());
  for (auto v : face) out.push_back(pair.lambda[v]);
  return out;
}

std::vector<char> special_mask(const CharacteristicPair& pair, const Hyperplane& pi) {
  if (pi.ambient_dimension() != pair.n) {
    throw Error(ErrorCode::DimensionMismatch, "subtorus covector has the wrong length");
  }
  std::vector<char> special(pair.lambda.size());
  for (std::size_t v = 0; v < special.size(); ++v) special[v] = pi.contains(pair.lambda[v]);
  return special;
}

std::size_t max_special_in_facet(const CharacteristicPair& pair, const Hyperplane& pi) {
  const auto special = special_mask(pair, pi);
  std::size_t best = 0;
  for (const auto& f : pair.nerve.facets()) {
    auto count = static_cast<std::size_t>(
        std::count_if(f.begin(), f.end(), [&](std::uint32_t v) { return special[v] != 0; }));
    best = std::max(best, count);
  }
  return best;
}

}  // namespace

bool check_star_condition(const CharacteristicPair& pair) {
  pair.check_shape();
  return std::all_of(pair.nerve.facets().begin(), pair.nerve.facets().end(), [&](const Face& f) {
    return is_unimodular_basis(values_on(pair, f), pair.n);
  });
}

std::vector<std::uint32_t> special_vertices(const CharacteristicPair& pair, const Hyperplane& pi) {
  pair.check_shape();
  const auto special = special_mask(pair, pi);
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < special.size(); ++v) {
    if (special[v]) out.push_back(v);
  }
  return out;
}

SimplicialComplex kspec(const CharacteristicPair& pair, const Hyperplane& pi) {
  return full_subcomplex_by_index(pair.nerve, special_vertices(pair, pi));
}

TangentData tangent_data(const CharacteristicPair& pair, const Face& facet, const Hyperplane& pi) {
  pair.check_shape();
  if (facet.size() != pair.n || !pair.nerve.contains_face(facet)) {
    throw Error(ErrorCode::DimensionMismatch, "tangent data needs an n-vertex face of the nerve");
  }
  TangentData t;
  t.facet = facet;
  t.lambda = values_on(pair, facet);
  if (!is_unimodular_basis(t.lambda, pair.n)) {
    throw Error(ErrorCode::StarConditionViolated, "characteristic values at the fixed point are not a basis");
  }
  // Rows of the weight matrix are the columns of Λ⁻¹ (inverse transpose).
  IntegerMatrix inv = unimodular_inverse(IntegerMatrix(t.lambda));
  for (std::size_t j = 0; j < pair.n; ++j) {
    IntVector w = inv.column(j);
    IntVector r;
    for (const auto& b : pi.basis()) r.push_back(dot(b, w));
    t.weights.push_back(std::move(w));
    t.restricted.push_back(std::move(r));
  }
  return t;
}

bool has_isolated_fixed_points(const CharacteristicPair& pair, const Hyperplane& pi) {
  pair.check_shape();
  if (pair.n == 0) return true;
  return max_special_in_facet(pair, pi) < pair.n - 1;
}

bool isolated_by_weights(const CharacteristicPair& pair, const Hyperplane& pi) {
  for (const auto& f : pair.nerve.facets()) {
    const TangentData t = tangent_data(pair, f, pi);
    for (const auto& r : t.restricted) {
      if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) == 0; })) return false;
    }
  }
  return true;
}

std::optional<Face> disconnected_stabilizer_face(const CharacteristicPair& pair,
                                                 const Hyperplane& pi) {
  pair.check_shape();
  if (pi.ambient_dimension() != pair.n) {
    throw Error(ErrorCode::DimensionMismatch, "subtorus covector has the wrong length");
  }
  const auto layers = faces_by_dimension(pair.nerve);
  for (std::size_t d = 1; d < layers.size(); ++d) {
    for (const auto& face : layers[d]) {
      const auto values = values_on(pair, face);
      if (!pi.quotient_is_torsion_free(pi.intersect(values))) return face;
    }
  }
  return std::nullopt;
}

bool has_connected_stabilizers(const CharacteristicPair& pair, const Hyperplane& pi) {
  return !disconnected_stabilizer_face(pair, pi).has_value();
}

int general_position_degree(const CharacteristicPair& pair, const Hyperplane& pi) {
  return static_cast<int>(pair.n) - 2 - kspec(pair, pi).dimension();
}

int general_position_degree_pointwise(const CharacteristicPair& pair, const Hyperplane& pi) {
  pair.check_shape();
  // At a facet with s special values some n − j of them lie in Π iff s ≥ n − j.
  const auto s = static_cast<int>(max_special_in_facet(pair, pi));
  return static_cast<int>(pair.n) - 1 - s;
}

}  // namespace qtorbit
