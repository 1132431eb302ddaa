#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtorbit/complex.hpp"

namespace qtorbit {

/// Uniform draw in [0, bound) that does not depend on the standard library's
/// distribution implementation, so seeded runs reproduce across platforms.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random complex on atoms 1..n generated by a few random faces. Ghost
/// vertices are possible.
SimplicialComplex random_complex(std::uint32_t n, std::mt19937_64& rng);

/// Random complex on atoms 1..n without ghost vertices and different from the
/// full simplex (n ≥ 2).
SimplicialComplex random_neighborly_complex(std::uint32_t n, std::mt19937_64& rng);

/// Every complex on atoms 1..n without ghost vertices other than the full
/// simplex. Exhaustive; n ≤ 5.
std::vector<SimplicialComplex> all_ghost_free_complexes(std::uint32_t n);

}  // namespace qtorbit
