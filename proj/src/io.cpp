#include "qtorbit/io.hpp"

#include <sstream>

#include "qtorbit/error.hpp"

namespace qtorbit::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) parse_error("bad integer string");
    return x;
  }
  parse_error("expected an integer");
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an integer array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json vector_to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

Json f_to_json(const FVector& f) {
  Json a = Json::array();
  for (auto c : f.counts) a.push_back(c);
  return a;
}

}  // namespace

Json to_json(const VertexLabel& v) {
  switch (v.kind()) {
    case VertexLabel::Kind::Atom:
      return Json(v.atom_id());
    case VertexLabel::Kind::Bary: {
      Json members = Json::array();
      for (const auto& m : v.members()) members.push_back(to_json(m));
      return Json{{"bary", std::move(members)}};
    }
    case VertexLabel::Kind::Apex:
      return Json{{"apex", Json{{"tag", std::string(to_string(v.apex_tag()))},
                                {"level", v.apex_level()}}}};
  }
  return {};
}

VertexLabel label_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      parse_error("vertex id out of range");
    }
    return VertexLabel::atom(j.get<std::int64_t>());
  }
  if (j.is_object() && j.size() == 1 && j.contains("bary")) {
    const Json& members = j.at("bary");
    if (!members.is_array() || members.empty()) parse_error("\"bary\" needs a nonempty label array");
    std::vector<VertexLabel> labels;
    for (const auto& m : members) labels.push_back(label_from_json(m));
    return VertexLabel::bary(std::move(labels));
  }
  if (j.is_object() && j.size() == 1 && j.contains("apex")) {
    const Json& a = j.at("apex");
    if (!a.is_object() || !a.contains("tag") || !a.contains("level") || !a.at("tag").is_string() ||
        !a.at("level").is_number_unsigned()) {
      parse_error("\"apex\" needs a string tag and a nonnegative level");
    }
    const auto tag = a.at("tag").get<std::string>();
    ApexTag t;
    if (tag == "north") {
      t = ApexTag::North;
    } else if (tag == "south") {
      t = ApexTag::South;
    } else if (tag == "cone") {
      t = ApexTag::Cone;
    } else {
      parse_error("unknown apex tag \"" + tag + "\"");
    }
    const auto level = a.at("level").get<std::uint64_t>();
    if (level > UINT32_MAX) parse_error("apex level out of range");
    return VertexLabel::apex(t, static_cast<std::uint32_t>(level));
  }
  parse_error("a vertex label is an integer, {\"bary\": [...]} or {\"apex\": {...}}");
}

Json to_json(const SimplicialComplex& k) {
  Json ground = Json::array();
  for (const auto& v : k.ground()) ground.push_back(to_json(v));
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json face = Json::array();
    for (auto v : f) face.push_back(to_json(k.ground()[v]));
    facets.push_back(std::move(face));
  }
  Json out;
  out["ground"] = std::move(ground);
  out["facets"] = std::move(facets);
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("facets")) {
    parse_error("a complex is an object with \"ground\" and \"facets\"");
  }
  const Json& g = j.at("ground");
  const Json& f = j.at("facets");
  if (!g.is_array() || !f.is_array()) parse_error("\"ground\" and \"facets\" must be arrays");
  std::vector<VertexLabel> ground;
  for (const auto& v : g) ground.push_back(label_from_json(v));
  std::vector<std::vector<VertexLabel>> facets;
  for (const auto& face : f) {
    if (!face.is_array()) parse_error("each facet must be an array of labels");
    std::vector<VertexLabel> labels;
    for (const auto& v : face) labels.push_back(label_from_json(v));
    facets.push_back(std::move(labels));
  }
  return SimplicialComplex::validate(std::move(ground), facets);
}

Json to_json(const GradedAbelianGroup& g) {
  Json rows = Json::array();
  int top = g.top_degree();
  if (!g.nontrivial().empty()) top = std::max(top, g.nontrivial().rbegin()->first);
  for (int d = -1; d <= top; ++d) {
    const AbelianGroup a = g.at(d);
    Json torsion = Json::array();
    for (const auto& t : a.torsion) torsion.push_back(integer_to_json(t));
    Json row;
    row["degree"] = d;
    row["rank"] = a.rank;
    row["torsion"] = std::move(torsion);
    rows.push_back(std::move(row));
  }
  return rows;
}

GradedAbelianGroup homology_from_json(const Json& j) {
  if (!j.is_array()) parse_error("a homology table is an array");
  GradedAbelianGroup g;
  for (const auto& row : j) {
    if (!row.is_object() || !row.contains("degree") || !row.contains("rank") ||
        !row.at("degree").is_number_integer() || !row.at("rank").is_number_unsigned()) {
      parse_error("homology rows need integer degree and rank");
    }
    AbelianGroup a;
    a.rank = row.at("rank").get<std::uint64_t>();
    if (row.contains("torsion")) a.torsion = vector_from_json(row.at("torsion"));
    const int d = row.at("degree").get<int>();
    g.set(d, std::move(a));
    g.set_top_degree(std::max(g.top_degree(), d));
  }
  return g;
}

Json to_json(const CharacteristicPair& pair, const IntVector& subtorus) {
  Json lambda = Json::array();
  for (std::size_t v = 0; v < pair.lambda.size(); ++v) {
    Json entry;
    entry["vertex"] = to_json(pair.nerve.ground()[v]);
    entry["value"] = vector_to_json(pair.lambda[v]);
    lambda.push_back(std::move(entry));
  }
  Json out;
  out["n"] = pair.n;
  out["nerve"] = to_json(pair.nerve);
  out["lambda"] = std::move(lambda);
  out["subtorus"] = vector_to_json(subtorus);
  return out;
}

PairDocument pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("nerve") || !j.contains("lambda")) {
    parse_error("a characteristic pair needs \"n\", \"nerve\" and \"lambda\"");
  }
  if (!j.at("n").is_number_unsigned()) parse_error("\"n\" must be a positive integer");
  PairDocument doc;
  doc.pair.n = j.at("n").get<std::uint32_t>();
  if (doc.pair.n == 0) parse_error("\"n\" must be a positive integer");
  doc.pair.nerve = complex_from_json(j.at("nerve"));
  doc.pair.lambda.assign(doc.pair.nerve.ground_size(), IntVector{});
  std::vector<char> seen(doc.pair.nerve.ground_size(), 0);
  if (!j.at("lambda").is_array()) parse_error("\"lambda\" must be an array");
  for (const auto& entry : j.at("lambda")) {
    if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("value")) {
      parse_error("lambda entries need \"vertex\" and \"value\"");
    }
    const VertexLabel v = label_from_json(entry.at("vertex"));
    auto idx = doc.pair.nerve.index_of(v);
    if (!idx) throw Error(ErrorCode::VertexNotInGround, "lambda vertex " + v.to_string() + " not in nerve");
    if (seen[*idx]) throw Error(ErrorCode::DuplicateVertex, "lambda given twice for " + v.to_string());
    seen[*idx] = 1;
    doc.pair.lambda[*idx] = vector_from_json(entry.at("value"));
  }
  doc.pair.check_shape();
  if (j.contains("subtorus")) {
    doc.subtorus = vector_from_json(j.at("subtorus"));
  } else {
    doc.subtorus.assign(doc.pair.n, 0);
    doc.subtorus.back() = 1;
  }
  if (doc.subtorus.size() != doc.pair.n) {
    throw Error(ErrorCode::DimensionMismatch, "subtorus covector must have length n");
  }
  return doc;
}

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json optional_table(const std::optional<GradedAbelianGroup>& g) {
  return g ? to_json(*g) : Json(nullptr);
}

}  // namespace

Json to_json(const OrbitReport& r) {
  Json input;
  input["L"] = to_json(r.l);
  if (r.m) input["M"] = to_json(*r.m);
  if (r.j) input["j"] = *r.j;

  Json pair;
  pair["n"] = r.n;
  pair["nerve_f"] = f_to_json(r.nerve_f);
  pair["special_vertices"] = r.special_count;
  pair["subtorus"] = vector_to_json(r.subtorus);

  Json checks;
  checks["star_condition"] = r.checks.star_condition;
  checks["isolated_fixed_points"] = r.checks.isolated_fixed_points;
  checks["isolated_by_weights"] = r.checks.isolated_by_weights;
  checks["connected_stabilizers"] = r.checks.connected_stabilizers;

  Json ks;
  ks["dim"] = r.kspec_dim;
  ks["f"] = f_to_json(r.kspec_f);

  Json homology;
  homology["L"] = to_json(r.homology_l);
  homology["alexander"] = optional_table(r.alexander);
  homology["direct"] = optional_table(r.direct);
  homology["sigma3_L"] = to_json(r.sigma3_l);
  if (r.sigma_m) homology["sigma_j2_M"] = to_json(*r.sigma_m);

  Json verdicts;
  verdicts["routes_agree"] = optional_bool(r.verdicts.routes_agree);
  verdicts["theorem1_holds"] = r.verdicts.theorem1_holds;
  verdicts["vanishing_low_degrees"] = r.verdicts.vanishing_low_degrees;
  verdicts["vanishing_through_j_star"] = r.verdicts.vanishing_through_j_star;
  if (r.j) {
    verdicts["general_position_at_least_j"] = optional_bool(r.verdicts.general_position_at_least_j);
    verdicts["theorem5_holds"] = optional_bool(r.verdicts.theorem5_holds);
  }

  Json out;
  out["input"] = std::move(input);
  out["pair"] = std::move(pair);
  out["checks"] = std::move(checks);
  out["kspec"] = std::move(ks);
  out["j_star"] = r.j_star;
  out["j_star_pointwise"] = r.j_star_pointwise;
  out["homology"] = std::move(homology);
  out["verdicts"] = std::move(verdicts);
  return out;
}

namespace {

void table_text(std::ostringstream& os, const char* title, const GradedAbelianGroup& g) {
  os << title << '\n';
  std::istringstream lines(g.to_string());
  for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_text(const OrbitReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", subtorus covector " << to_string(r.subtorus) << '\n';
  if (r.j) os << "j = " << *r.j << " (L = s^" << (*r.j - 1) << "(M))\n";
  os << "special vertices: " << r.special_count << '\n';
  os << "star condition: " << yes_no(r.checks.star_condition) << '\n';
  os << "isolated fixed points: " << yes_no(r.checks.isolated_fixed_points)
     << " (weights: " << yes_no(r.checks.isolated_by_weights) << ")\n";
  os << "connected stabilizers: " << yes_no(r.checks.connected_stabilizers) << '\n';
  os << "K_spec dimension: " << r.kspec_dim << '\n';
  os << "general position degree j*: " << r.j_star << " (pointwise " << r.j_star_pointwise << ")\n";
  table_text(os, "homology of L:", r.homology_l);
  if (r.alexander) table_text(os, "orbit space, Alexander route:", *r.alexander);
  if (r.direct) table_text(os, "orbit space, direct route:", *r.direct);
  table_text(os, "homology of Sigma^3 L:", r.sigma3_l);
  if (r.sigma_m) table_text(os, "homology of Sigma^(j+2) M:", *r.sigma_m);
  auto opt = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; };
  os << "routes agree: " << opt(r.verdicts.routes_agree) << '\n';
  os << "H(Q) = H(L) shifted by 3: " << yes_no(r.verdicts.theorem1_holds) << '\n';
  os << "H_0 = H_1 = H_2 = 0: " << yes_no(r.verdicts.vanishing_low_degrees) << '\n';
  os << "H_i = 0 for i <= j*+1: " << yes_no(r.verdicts.vanishing_through_j_star) << '\n';
  if (r.j) {
    os << "j* >= j: " << opt(r.verdicts.general_position_at_least_j) << '\n';
    os << "H(Q) = H(Sigma^(j+2) M): " << opt(r.verdicts.theorem5_holds) << '\n';
  }
  return os.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_compact(const Json& j) { return j.dump() + "\n"; }

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qtorbit::io
