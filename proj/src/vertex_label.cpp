#include "qtorbit/vertex_label.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtorbit/error.hpp"

namespace qtorbit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::FacetOutsideGround: return "FacetOutsideGround";
    case ErrorCode::ApexCollision: return "ApexCollision";
    case ErrorCode::VertexNotInGround: return "VertexNotInGround";
    case ErrorCode::FullSimplexInput: return "FullSimplexInput";
    case ErrorCode::GhostVertexInput: return "GhostVertexInput";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::ImproperSubset: return "ImproperSubset";
    case ErrorCode::NonIncreasingB: return "NonIncreasingB";
    case ErrorCode::NotInHyperplane: return "NotInHyperplane";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::StarConditionViolated: return "StarConditionViolated";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

std::string_view to_string(ApexTag tag) {
  switch (tag) {
    case ApexTag::North: return "north";
    case ApexTag::South: return "south";
    case ApexTag::Cone: return "cone";
  }
  return "?";
}

VertexLabel VertexLabel::atom(std::int64_t id) {
  VertexLabel v;
  v.kind_ = Kind::Atom;
  v.id_ = id;
  return v;
}

VertexLabel VertexLabel::bary(std::vector<VertexLabel> members) {
  if (members.empty()) {
    throw Error(ErrorCode::ParseError, "barycenter label needs at least one member");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  VertexLabel v;
  v.kind_ = Kind::Bary;
  v.members_ = std::make_shared<const std::vector<VertexLabel>>(std::move(members));
  return v;
}

VertexLabel VertexLabel::apex(ApexTag tag, std::uint32_t level) {
  VertexLabel v;
  v.kind_ = Kind::Apex;
  v.tag_ = tag;
  v.level_ = level;
  return v;
}

std::int64_t VertexLabel::atom_id() const {
  if (kind_ != Kind::Atom) throw std::logic_error("label is not an atom");
  return id_;
}

std::span<const VertexLabel> VertexLabel::members() const {
  if (kind_ != Kind::Bary) throw std::logic_error("label is not a barycenter");
  return *members_;
}

ApexTag VertexLabel::apex_tag() const {
  if (kind_ != Kind::Apex) throw std::logic_error("label is not an apex");
  return tag_;
}

std::uint32_t VertexLabel::apex_level() const {
  if (kind_ != Kind::Apex) throw std::logic_error("label is not an apex");
  return level_;
}

std::string VertexLabel::to_string() const {
  switch (kind_) {
    case Kind::Atom:
      return std::to_string(id_);
    case Kind::Bary: {
      std::string s = "[";
      for (std::size_t i = 0; i < members_->size(); ++i) {
        if (i) s += ',';
        s += (*members_)[i].to_string();
      }
      return s + "]";
    }
    case Kind::Apex: {
      char c = tag_ == ApexTag::North ? 'N' : tag_ == ApexTag::South ? 'S' : 'C';
      return c + std::to_string(level_);
    }
  }
  return {};
}

std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case VertexLabel::Kind::Atom:
      return a.id_ <=> b.id_;
    case VertexLabel::Kind::Bary: {
      if (a.members_ == b.members_) return std::strong_ordering::equal;
      const auto& x = *a.members_;
      const auto& y = *b.members_;
      return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(),
                                                    y.end());
    }
    case VertexLabel::Kind::Apex:
      if (a.level_ != b.level_) return a.level_ <=> b.level_;
      return a.tag_ <=> b.tag_;
  }
  return std::strong_ordering::equal;
}

}  // namespace qtorbit
