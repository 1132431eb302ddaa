#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qtorbit {

enum class ApexTag : std::uint8_t { North, South, Cone };

/// Name of a vertex. Atoms are user-supplied integers; barycenters name a
/// nonempty set of labels (a face of a subdivided complex); apexes are the
/// fresh points added by suspensions and cones.
///
/// Labels are totally ordered: all atoms precede all barycenters, which
/// precede all apexes. Atoms compare by id, barycenters lexicographically by
/// their sorted member lists, apexes by (level, tag).
class VertexLabel {
 public:
  enum class Kind : std::uint8_t { Atom, Bary, Apex };

  VertexLabel() = default;

  static VertexLabel atom(std::int64_t id);
  /// Members are sorted and deduplicated; an empty list throws.
  static VertexLabel bary(std::vector<VertexLabel> members);
  static VertexLabel apex(ApexTag tag, std::uint32_t level);

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::Atom; }
  bool is_bary() const noexcept { return kind_ == Kind::Bary; }
  bool is_apex() const noexcept { return kind_ == Kind::Apex; }

  std::int64_t atom_id() const;
  std::span<const VertexLabel> members() const;
  ApexTag apex_tag() const;
  std::uint32_t apex_level() const;

  /// Compact text form: `3`, `[1,2]`, `N0` / `S0` / `C2`.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const VertexLabel& a,
                                          const VertexLabel& b);
  friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Kind kind_ = Kind::Atom;
  ApexTag tag_ = ApexTag::North;
  std::uint32_t level_ = 0;
  std::int64_t id_ = 0;
  // Shared so that deep barycentric labels copy in O(1).
  std::shared_ptr<const std::vector<VertexLabel>> members_;
};

std::string_view to_string(ApexTag tag);

}  // namespace qtorbit
