#include "qtorbit/permutohedron.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qtorbit/error.hpp"

namespace qtorbit {

namespace {

constexpr std::uint32_t kMaxGround = 20;

}  // namespace

PermutohedralSphere permutohedral_sphere(std::span<const VertexLabel> ground) {
  const auto n = static_cast<std::uint32_t>(ground.size());
  if (n < 2) throw Error(ErrorCode::BadDimension, "permutohedral sphere needs n >= 2");
  if (n > kMaxGround) throw Error(ErrorCode::TooLarge, "permutohedral sphere limited to n <= 20");
  if (!std::is_sorted(ground.begin(), ground.end()) ||
      std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw Error(ErrorCode::DuplicateVertex, "ground set must be sorted and duplicate-free");
  }
  const std::uint32_t full = (1u << n) - 1;

  // Bary labels compare like the sorted position lists of their subsets.
  std::vector<Face> members;
  for (std::uint32_t s = 1; s < full; ++s) {
    Face f;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (s >> i & 1) f.push_back(i);
    }
    members.push_back(std::move(f));
  }
  std::sort(members.begin(), members.end());

  PermutohedralSphere out;
  out.n = n;
  std::vector<VertexLabel> labels;
  std::vector<std::uint32_t> index_of_mask(full + 1, 0);
  for (const auto& f : members) {
    std::uint32_t mask = 0;
    std::vector<VertexLabel> m;
    for (auto i : f) {
      mask |= 1u << i;
      m.push_back(ground[i]);
    }
    index_of_mask[mask] = static_cast<std::uint32_t>(labels.size());
    out.subsets.push_back(mask);
    labels.push_back(VertexLabel::bary(std::move(m)));
  }

  // Maximal chains S₁ ⊂ … ⊂ Sₙ₋₁ ↔ permutations of the ground set.
  std::vector<Face> chains;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    Face chain;
    std::uint32_t mask = 0;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      mask |= 1u << perm[i];
      chain.push_back(index_of_mask[mask]);
    }
    chains.push_back(std::move(chain));
  } while (std::next_permutation(perm.begin(), perm.end()));

  out.complex = SimplicialComplex::from_faces(std::move(labels), std::move(chains));
  return out;
}

PermutohedralSphere permutohedral_sphere(std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "permutohedral sphere needs n >= 2");
  std::vector<VertexLabel> ground;
  for (std::uint32_t i = 1; i <= n; ++i) ground.push_back(VertexLabel::atom(i));
  return permutohedral_sphere(ground);
}

IntVector normal_vector_mask(std::uint32_t mask, std::uint32_t n) {
  const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;
  if (n < 2 || mask == 0 || (mask & ~full) != 0 || mask == full) {
    throw Error(ErrorCode::ImproperSubset, "normal vector needs a proper nonempty subset");
  }
  IntVector nu(n - 1, 0);
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    if (mask >> i & 1) nu[i] += 1;
  }
  if (mask >> (n - 1) & 1) {
    for (auto& x : nu) x -= 1;
  }
  return nu;
}

IntVector normal_vector(std::span<const std::uint32_t> subset, std::uint32_t n) {
  std::uint32_t mask = 0;
  for (auto i : subset) {
    if (i < 1 || i > n || i > 32 || (mask >> (i - 1) & 1)) {
      throw Error(ErrorCode::ImproperSubset, "subset element out of range or repeated");
    }
    mask |= 1u << (i - 1);
  }
  return normal_vector_mask(mask, n);
}

SimplicialComplex prism_nerve(std::span<const VertexLabel> ground) {
  return suspension(permutohedral_sphere(ground).complex, 1);
}

SimplicialComplex prism_nerve(std::uint32_t n) {
  return suspension(permutohedral_sphere(n).complex, 1);
}

namespace {

void check_rado_input(std::span<const Rational> x, std::span<const Rational> b) {
  if (x.size() != b.size() || b.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "x and b must have the same positive length");
  }
  if (b.size() > kMaxGround) throw Error(ErrorCode::TooLarge, "Rado check limited to n <= 20");
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (!(b[i - 1] < b[i])) throw Error(ErrorCode::NonIncreasingB, "b must be strictly increasing");
  }
}

// bound[k] = sum of the k largest entries of b.
std::vector<Rational> top_sums(std::span<const Rational> b) {
  std::vector<Rational> bound(b.size() + 1, 0);
  for (std::size_t k = 1; k <= b.size(); ++k) bound[k] = bound[k - 1] + b[b.size() - k];
  return bound;
}

}  // namespace

bool rado_contains(std::span<const Rational> x, std::span<const Rational> b) {
  check_rado_input(x, b);
  const auto n = static_cast<std::uint32_t>(b.size());
  const auto bound = top_sums(b);
  const Rational total = std::accumulate(x.begin(), x.end(), Rational(0));
  if (total != bound[n]) return false;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    Rational sum = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (s >> i & 1) sum += x[i];
    }
    if (sum > bound[static_cast<std::size_t>(std::popcount(s))]) return false;
  }
  return true;
}

std::vector<std::uint32_t> rado_tight_sets(std::span<const Rational> x,
                                           std::span<const Rational> b) {
  check_rado_input(x, b);
  const auto n = static_cast<std::uint32_t>(b.size());
  const auto bound = top_sums(b);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> tight;
  for (std::uint32_t s = 1; s < full; ++s) {
    Rational sum = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (s >> i & 1) sum += x[i];
    }
    if (sum == bound[static_cast<std::size_t>(std::popcount(s))]) tight.push_back(s);
  }
  return tight;
}

}  // namespace qtorbit
