#include "qtorbit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "qtorbit/error.hpp"

namespace qtorbit {

namespace {

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = f.size();
    for (auto v : f) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Keeps only the inclusion-maximal faces; input faces must be sorted.
std::vector<Face> maximal_faces(std::vector<Face> faces, std::size_t ground_size) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<Face> kept;
  std::vector<std::vector<std::uint32_t>> incidence(ground_size);
  for (auto& f : faces) {
    if (f.empty()) {
      if (kept.empty()) kept.push_back(f);
      continue;
    }
    std::uint32_t probe = f.front();
    for (auto v : f) {
      if (incidence[v].size() < incidence[probe].size()) probe = v;
    }
    bool covered = std::any_of(incidence[probe].begin(), incidence[probe].end(),
                               [&](std::uint32_t i) {
                                 return std::includes(kept[i].begin(), kept[i].end(),
                                                      f.begin(), f.end());
                               });
    if (covered) continue;
    auto id = static_cast<std::uint32_t>(kept.size());
    for (auto v : f) incidence[v].push_back(id);
    kept.push_back(std::move(f));
  }
  if (kept.empty()) kept.emplace_back();
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex make_normalized(std::vector<VertexLabel> ground, std::vector<Face> faces,
                                  bool maximal) {
  // Sort the ground set and remap positions.
  std::vector<std::uint32_t> order(ground.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return ground[a] < ground[b]; });
  bool identity = std::is_sorted(order.begin(), order.end());
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (ground[order[i - 1]] == ground[order[i]]) {
      throw Error(ErrorCode::DuplicateVertex,
                  "duplicate vertex " + ground[order[i]].to_string() + " in ground set");
    }
  }
  SimplicialComplex k;
  if (!identity) {
    std::vector<std::uint32_t> position(ground.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    std::vector<VertexLabel> sorted(ground.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) sorted[i] = std::move(ground[order[i]]);
    ground = std::move(sorted);
    for (auto& f : faces) {
      for (auto& v : f) v = position[v];
    }
  }
  for (auto& f : faces) std::sort(f.begin(), f.end());
  if (maximal) {
    if (faces.empty()) faces.emplace_back();
    std::sort(faces.begin(), faces.end());
    k.facets_ = std::move(faces);
  } else {
    k.facets_ = maximal_faces(std::move(faces), ground.size());
  }
  k.ground_ = std::move(ground);
  return k;
}

SimplicialComplex::SimplicialComplex() : facets_{Face{}} {}

SimplicialComplex SimplicialComplex::validate(
    std::vector<VertexLabel> ground, const std::vector<std::vector<VertexLabel>>& facets) {
  SimplicialComplex probe = make_normalized(ground, {}, false);  // duplicate check
  std::vector<Face> faces;
  faces.reserve(facets.size());
  for (const auto& facet : facets) {
    Face f;
    f.reserve(facet.size());
    for (const auto& v : facet) {
      auto idx = probe.index_of(v);
      if (!idx) {
        throw Error(ErrorCode::FacetOutsideGround,
                    "facet vertex " + v.to_string() + " is not in the ground set");
      }
      f.push_back(*idx);
    }
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    faces.push_back(std::move(f));
  }
  return make_normalized(std::move(probe.ground_), std::move(faces), false);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<VertexLabel> ground,
                                                std::vector<Face> faces) {
  for (const auto& f : faces) {
    for (auto v : f) {
      if (v >= ground.size()) {
        throw Error(ErrorCode::FacetOutsideGround, "face index outside the ground set");
      }
    }
  }
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  return make_normalized(std::move(ground), std::move(faces), false);
}

SimplicialComplex SimplicialComplex::simplex(std::vector<VertexLabel> ground) {
  Face all(ground.size());
  std::iota(all.begin(), all.end(), 0u);
  return make_normalized(std::move(ground), {std::move(all)}, true);
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::vector<VertexLabel> ground) {
  const auto n = static_cast<std::uint32_t>(ground.size());
  std::vector<Face> faces;
  for (std::uint32_t skip = 0; skip < n; ++skip) {
    Face f;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (v != skip) f.push_back(v);
    }
    faces.push_back(std::move(f));
  }
  return make_normalized(std::move(ground), std::move(faces), n > 1);
}

SimplicialComplex SimplicialComplex::sphere_boundary(std::uint32_t n) {
  std::vector<VertexLabel> ground;
  for (std::uint32_t i = 1; i <= n; ++i) ground.push_back(VertexLabel::atom(i));
  return simplex_boundary(std::move(ground));
}

int SimplicialComplex::dimension() const noexcept {
  std::size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool SimplicialComplex::is_full_simplex() const noexcept {
  return facets_.size() == 1 && facets_.front().size() == ground_.size();
}

std::optional<std::uint32_t> SimplicialComplex::index_of(const VertexLabel& v) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
  if (it == ground_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::uint32_t>(it - ground_.begin());
}

std::vector<VertexLabel> SimplicialComplex::labels_of(
    std::span<const std::uint32_t> face) const {
  std::vector<VertexLabel> out;
  out.reserve(face.size());
  for (auto v : face) out.push_back(ground_.at(v));
  return out;
}

bool SimplicialComplex::contains_face(std::span<const std::uint32_t> face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return std::includes(f.begin(), f.end(), face.begin(), face.end());
  });
}

namespace {

void collect_apex_level(const VertexLabel& v, std::optional<std::uint32_t>& best) {
  if (v.is_apex()) {
    if (!best || v.apex_level() > *best) best = v.apex_level();
  } else if (v.is_bary()) {
    for (const auto& m : v.members()) collect_apex_level(m, best);
  }
}

std::uint32_t fresh_apex_level(const SimplicialComplex& k) {
  auto level = k.max_apex_level();
  return level ? *level + 1 : 0;
}

}  // namespace

std::optional<std::uint32_t> SimplicialComplex::max_apex_level() const {
  std::optional<std::uint32_t> best;
  for (const auto& v : ground_) collect_apex_level(v, best);
  return best;
}

bool is_face(const SimplicialComplex& k, std::span<const VertexLabel> sigma) {
  Face f;
  f.reserve(sigma.size());
  for (const auto& v : sigma) {
    auto idx = k.index_of(v);
    if (!idx) return false;
    f.push_back(*idx);
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return k.contains_face(f);
}

std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& k) {
  const int dim = k.dimension();
  std::vector<std::unordered_set<Face, FaceHash>> seen(static_cast<std::size_t>(dim + 2));
  Face sub;
  for (const auto& facet : k.facets()) {
    const std::size_t m = facet.size();
    if (m >= 63) throw Error(ErrorCode::TooLarge, "facet too large to enumerate");
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) sub.push_back(facet[i]);
      }
      seen[sub.size()].insert(sub);
    }
  }
  std::vector<std::vector<Face>> out(seen.size());
  out[0].emplace_back();
  for (std::size_t d = 1; d < seen.size(); ++d) {
    out[d].assign(seen[d].begin(), seen[d].end());
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

FVector f_vector(const SimplicialComplex& k) {
  FVector fv;
  auto faces = faces_by_dimension(k);
  for (std::size_t d = 1; d < faces.size(); ++d) fv.counts.push_back(faces[d].size());
  while (!fv.counts.empty() && fv.counts.back() == 0) fv.counts.pop_back();
  return fv;
}

SimplicialComplex cone(const SimplicialComplex& k, const VertexLabel& apex) {
  if (k.index_of(apex)) {
    throw Error(ErrorCode::ApexCollision,
                "cone apex " + apex.to_string() + " already in the ground set");
  }
  std::vector<VertexLabel> ground = k.ground();
  const auto c = static_cast<std::uint32_t>(ground.size());
  ground.push_back(apex);
  std::vector<Face> faces = k.facets();
  for (auto& f : faces) f.push_back(c);
  return make_normalized(std::move(ground), std::move(faces), true);
}

SimplicialComplex suspension(const SimplicialComplex& k, std::uint32_t times) {
  if (times == 0) return k;
  const std::uint32_t base = fresh_apex_level(k);
  std::vector<VertexLabel> ground = k.ground();
  std::vector<Face> faces = k.facets();
  for (std::uint32_t t = 0; t < times; ++t) {
    const auto north = static_cast<std::uint32_t>(ground.size());
    ground.push_back(VertexLabel::apex(ApexTag::North, base + t));
    ground.push_back(VertexLabel::apex(ApexTag::South, base + t));
    std::vector<Face> next;
    next.reserve(faces.size() * 2);
    for (const auto& f : faces) {
      for (std::uint32_t pole : {north, north + 1}) {
        Face g = f;
        g.push_back(pole);
        next.push_back(std::move(g));
      }
    }
    faces = std::move(next);
  }
  return make_normalized(std::move(ground), std::move(faces), true);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  auto layers = faces_by_dimension(k);
  std::vector<Face> vertices;
  for (std::size_t d = 1; d < layers.size(); ++d) {
    for (auto& f : layers[d]) vertices.push_back(std::move(f));
  }
  if (vertices.empty()) return {};
  // Lexicographic order on position lists agrees with the label order of the
  // corresponding barycenters, so the new ground set is already sorted.
  std::sort(vertices.begin(), vertices.end());
  auto position = [&](const Face& f) {
    return static_cast<std::uint32_t>(
        std::lower_bound(vertices.begin(), vertices.end(), f) - vertices.begin());
  };

  std::vector<VertexLabel> ground;
  ground.reserve(vertices.size());
  for (const auto& f : vertices) ground.push_back(VertexLabel::bary(k.labels_of(f)));

  std::vector<Face> flags;
  Face perm, prefix;
  for (const auto& facet : k.facets()) {
    if (facet.empty()) continue;
    perm = facet;
    do {
      Face flag;
      flag.reserve(perm.size());
      prefix.clear();
      for (auto v : perm) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(position(prefix));
      }
      std::sort(flag.begin(), flag.end());
      flags.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return make_normalized(std::move(ground), std::move(flags), true);
}

SimplicialComplex full_subcomplex_by_index(const SimplicialComplex& k,
                                           std::span<const std::uint32_t> w) {
  std::vector<std::uint32_t> keep(w.begin(), w.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::int64_t> position(k.ground_size(), -1);
  std::vector<VertexLabel> ground;
  for (auto v : keep) {
    if (v >= k.ground_size()) {
      throw Error(ErrorCode::VertexNotInGround, "vertex index outside the ground set");
    }
    position[v] = static_cast<std::int64_t>(ground.size());
    ground.push_back(k.ground()[v]);
  }
  std::vector<Face> faces;
  for (const auto& f : k.facets()) {
    Face g;
    for (auto v : f) {
      if (position[v] >= 0) g.push_back(static_cast<std::uint32_t>(position[v]));
    }
    faces.push_back(std::move(g));
  }
  return make_normalized(std::move(ground), std::move(faces), false);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexLabel> w) {
  std::vector<std::uint32_t> idx;
  for (const auto& v : w) {
    auto i = k.index_of(v);
    if (!i) {
      throw Error(ErrorCode::VertexNotInGround,
                  "vertex " + v.to_string() + " is not in the ground set");
    }
    idx.push_back(*i);
  }
  return full_subcomplex_by_index(k, idx);
}

namespace {

constexpr std::size_t kMaxMaskVertices = 24;

std::vector<std::uint64_t> facet_masks(const SimplicialComplex& k) {
  std::vector<std::uint64_t> masks;
  for (const auto& f : k.facets()) {
    std::uint64_t m = 0;
    for (auto v : f) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

bool mask_is_face(std::span<const std::uint64_t> facets, std::uint64_t s) {
  return std::any_of(facets.begin(), facets.end(),
                     [s](std::uint64_t f) { return (s & ~f) == 0; });
}

}  // namespace

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  const std::size_t n = k.ground_size();
  if (n == 0) throw Error(ErrorCode::BadDimension, "Alexander dual needs a nonempty ground set");
  if (k.is_full_simplex()) {
    throw Error(ErrorCode::FullSimplexInput, "full simplex has no Alexander dual");
  }
  if (n > kMaxMaskVertices) {
    throw Error(ErrorCode::TooLarge, "Alexander dual limited to 24 vertices");
  }
  const auto masks = facet_masks(k);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<char> in_dual(full + 1, 0);
  for (std::uint64_t s = 0; s <= full; ++s) in_dual[s] = !mask_is_face(masks, full & ~s);

  std::vector<Face> faces;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (!in_dual[s]) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(s & bit) && in_dual[s | bit]) maximal = false;
    }
    if (!maximal) continue;
    Face f;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (s >> v & 1) f.push_back(v);
    }
    faces.push_back(std::move(f));
  }
  return make_normalized(k.ground(), std::move(faces), true);
}

bool is_j_neighborly(const SimplicialComplex& k, std::uint32_t j) {
  const std::size_t n = k.ground_size();
  if (j == 0 || j > n) return true;
  // Walk all j-subsets in lexicographic order.
  Face subset(j);
  std::iota(subset.begin(), subset.end(), 0u);
  while (true) {
    if (!k.contains_face(subset)) return false;
    std::int64_t i = static_cast<std::int64_t>(j) - 1;
    while (i >= 0 && subset[i] == n - j + static_cast<std::size_t>(i)) --i;
    if (i < 0) return true;
    ++subset[i];
    for (std::size_t t = static_cast<std::size_t>(i) + 1; t < j; ++t) {
      subset[t] = subset[t - 1] + 1;
    }
  }
}

std::vector<VertexLabel> ghost_vertices(const SimplicialComplex& k) {
  std::vector<char> used(k.ground_size(), 0);
  for (const auto& f : k.facets()) {
    for (auto v : f) used[v] = 1;
  }
  std::vector<VertexLabel> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) out.push_back(k.ground()[i]);
  }
  return out;
}

SimplicialComplex s_operation(const SimplicialComplex& k, std::uint32_t times) {
  if (!ghost_vertices(k).empty()) {
    throw Error(ErrorCode::GhostVertexInput, "s-operation needs a complex without ghost vertices");
  }
  SimplicialComplex current = k;
  for (std::uint32_t t = 0; t < times; ++t) {
    std::vector<VertexLabel> ground = current.ground();
    const auto n = static_cast<std::uint32_t>(ground.size());
    ground.push_back(VertexLabel::apex(ApexTag::Cone, fresh_apex_level(current)));
    std::vector<Face> faces = current.facets();
    for (auto& f : faces) f.push_back(n);
    Face old_vertices(n);
    std::iota(old_vertices.begin(), old_vertices.end(), 0u);
    faces.push_back(std::move(old_vertices));
    current = make_normalized(std::move(ground), std::move(faces), false);
  }
  return current;
}

}  // namespace qtorbit
