#include "qtorbit/sampling.hpp"

#include <bit>

#include "qtorbit/error.hpp"

namespace qtorbit {

namespace {

std::vector<VertexLabel> atoms(std::uint32_t n) {
  std::vector<VertexLabel> g;
  for (std::uint32_t i = 1; i <= n; ++i) g.push_back(VertexLabel::atom(i));
  return g;
}

Face mask_face(std::uint32_t mask) {
  Face f;
  for (std::uint32_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) f.push_back(i);
  }
  return f;
}

}  // namespace

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

SimplicialComplex random_complex(std::uint32_t n, std::mt19937_64& rng) {
  if (n == 0 || n > 20) throw Error(ErrorCode::BadDimension, "random complexes need 1 <= n <= 20");
  const std::uint64_t generators = 1 + draw_below(rng, 2 * n);
  std::vector<Face> faces;
  for (std::uint64_t g = 0; g < generators; ++g) {
    // Face size first, then a random subset of that size.
    const auto size = static_cast<std::uint32_t>(1 + draw_below(rng, n));
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    Face f;
    for (std::uint32_t t = 0; t < size; ++t) {
      const auto pick = static_cast<std::size_t>(draw_below(rng, pool.size()));
      f.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(atoms(n), std::move(faces));
}

SimplicialComplex random_neighborly_complex(std::uint32_t n, std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "need at least two vertices");
  while (true) {
    SimplicialComplex k = random_complex(n, rng);
    std::vector<Face> faces = k.facets();
    for (std::uint32_t v = 0; v < n; ++v) faces.push_back({v});
    SimplicialComplex l = SimplicialComplex::from_faces(atoms(n), std::move(faces));
    if (!l.is_full_simplex()) return l;
  }
}

std::vector<SimplicialComplex> all_ghost_free_complexes(std::uint32_t n) {
  if (n == 0 || n > 5) throw Error(ErrorCode::TooLarge, "exhaustive enumeration needs 1 <= n <= 5");
  const std::uint32_t full = (1u << n) - 1;
  // Candidate faces: nonempty proper subsets of size ≥ 2 (singletons always
  // present, the full set excluded). Enumerate antichains among them by
  // choosing facets greedily in increasing mask order.
  std::vector<std::uint32_t> big;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (std::popcount(s) >= 2) big.push_back(s);
  }
  std::vector<SimplicialComplex> out;
  std::vector<std::uint32_t> chosen;
  auto emit = [&] {
    std::vector<Face> faces;
    for (auto s : chosen) faces.push_back(mask_face(s));
    for (std::uint32_t v = 0; v < n; ++v) faces.push_back({v});
    auto k = SimplicialComplex::from_faces(atoms(n), std::move(faces));
    if (!k.is_full_simplex()) out.push_back(std::move(k));
  };
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    emit();
    for (std::size_t i = from; i < big.size(); ++i) {
      const std::uint32_t s = big[i];
      bool comparable = false;
      for (auto c : chosen) {
        if ((c & s) == c || (c & s) == s) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      chosen.push_back(s);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace qtorbit
