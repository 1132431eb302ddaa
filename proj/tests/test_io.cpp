#include "doctest.h"
#include "helpers.hpp"
#include "qtorbit/error.hpp"
#include "qtorbit/io.hpp"

using namespace qtorbit;
using io::Json;

TEST_CASE("label round trip") {
  const std::vector<VertexLabel> labels = {
      VertexLabel::atom(-4), VertexLabel::bary(testing::atoms({3, 1})),
      VertexLabel::apex(ApexTag::Cone, 2),
      VertexLabel::bary({VertexLabel::apex(ApexTag::North, 0), VertexLabel::atom(2)})};
  for (const auto& l : labels) CHECK(io::label_from_json(io::to_json(l)) == l);
  CHECK(io::to_json(VertexLabel::atom(7)).dump() == "7");
  CHECK(io::to_json(VertexLabel::bary(testing::atoms({2, 1}))).dump() == R"({"bary":[1,2]})");
  CHECK(io::to_json(VertexLabel::apex(ApexTag::South, 1)).dump() ==
        R"({"apex":{"tag":"south","level":1}})");
}

TEST_CASE("complex documents are canonical") {
  auto k = io::complex_from_json(io::parse(R"({"ground":[3,1,2],"facets":[[2,3],[2,1],[1]]})"));
  CHECK(io::dump_compact(io::to_json(k)) == "{\"ground\":[1,2,3],\"facets\":[[1,2],[2,3]]}\n");
  CHECK(io::complex_from_json(io::to_json(testing::rp2())) == testing::rp2());
  auto empty = io::complex_from_json(io::parse(R"({"ground":[],"facets":[[]]})"));
  CHECK(empty == SimplicialComplex());
}

TEST_CASE("malformed documents") {
  auto code_of = [](const std::string& text) {
    try {
      io::complex_from_json(io::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::TooLarge;
  };
  CHECK(code_of("{") == ErrorCode::ParseError);
  CHECK(code_of(R"({"ground":[1]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"ground":[1],"facets":[["x"]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"ground":[1],"facets":[[{"bary":[]}]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"ground":[1],"facets":[[{"apex":{"tag":"up","level":0}}]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"ground":[1,1],"facets":[[1]]})") == ErrorCode::DuplicateVertex);
  CHECK(code_of(R"({"ground":[1],"facets":[[2]]})") == ErrorCode::FacetOutsideGround);
}

TEST_CASE("homology tables") {
  auto g = testing::graded({{1, {0, {2}}}, {3, {2, {}}}});
  g.set_top_degree(3);
  auto j = io::to_json(g);
  CHECK(j.size() == 5);
  CHECK(j[0].dump() == R"({"degree":-1,"rank":0,"torsion":[]})");
  CHECK(j[2].dump() == R"({"degree":1,"rank":0,"torsion":[2]})");
  CHECK(io::homology_from_json(j) == g);
}

TEST_CASE("pair round trip") {
  auto p = build_lambda_hat(testing::three_points());
  const auto sub = testing::iv({0, 0, 1});
  auto doc = io::pair_from_json(io::to_json(p, sub));
  CHECK(doc.pair.n == 3);
  CHECK(doc.pair.nerve == p.nerve);
  CHECK(doc.pair.lambda == p.lambda);
  CHECK(doc.subtorus == sub);
  CHECK(io::dump_compact(io::to_json(doc.pair, doc.subtorus)) == io::dump_compact(io::to_json(p, sub)));
}

TEST_CASE("reports") {
  auto r = verify_theorem1(testing::three_points());
  auto j = io::to_json(r);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"input", "pair", "checks", "kspec", "j_star",
                                         "j_star_pointwise", "homology", "verdicts"});
  CHECK(j["homology"].contains("direct"));
  CHECK(j["kspec"]["dim"] == 0);
  CHECK(io::dump_pretty(j) == io::dump_pretty(io::to_json(verify_theorem1(testing::three_points()))));
  CHECK_FALSE(io::to_text(r).empty());
}
