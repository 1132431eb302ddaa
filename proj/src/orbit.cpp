#include "qtorbit/orbit.hpp"

#include <algorithm>

#include "qtorbit/error.hpp"

namespace qtorbit {

namespace {

void require_hypotheses(const CharacteristicPair& pair, const Hyperplane& pi) {
  if (!has_isolated_fixed_points(pair, pi)) {
    throw Error(ErrorCode::HypothesisFailed, "restricted action has non-isolated fixed points");
  }
  if (!has_connected_stabilizers(pair, pi)) {
    throw Error(ErrorCode::HypothesisFailed, "restricted action has disconnected stabilizers");
  }
}

}  // namespace

GradedAbelianGroup orbit_homology_alexander(const CharacteristicPair& pair, const Hyperplane& pi) {
  require_hypotheses(pair, pi);
  const GradedAbelianGroup co = reduced_cohomology(kspec(pair, pi));
  const int n = static_cast<int>(pair.n);
  GradedAbelianGroup q(n + 1);
  for (int i = 0; i <= n + 1; ++i) q.set(i, co.at(n - i));
  return q;
}

SimplicialComplex ynon_model(const CharacteristicPair& pair, const Hyperplane& pi) {
  pair.check_shape();
  const auto special = special_vertices(pair, pi);
  std::vector<char> is_special(pair.nerve.ground_size(), 0);
  for (auto v : special) is_special[v] = 1;

  const SimplicialComplex sd = barycentric_subdivision(pair.nerve);
  std::vector<std::uint32_t> keep;
  for (std::uint32_t v = 0; v < sd.ground_size(); ++v) {
    const auto members = sd.ground()[v].members();
    const bool non_special = std::any_of(members.begin(), members.end(), [&](const VertexLabel& x) {
      return !is_special[*pair.nerve.index_of(x)];
    });
    if (non_special) keep.push_back(v);
  }
  return full_subcomplex_by_index(sd, keep);
}

GradedAbelianGroup orbit_homology_direct(const CharacteristicPair& pair, const Hyperplane& pi,
                                         bool suspend_model) {
  require_hypotheses(pair, pi);
  const SimplicialComplex y = ynon_model(pair, pi);
  GradedAbelianGroup q =
      suspend_model ? reduced_homology(suspension(y, 2)) : reduced_homology(y).shifted(2);
  q.set_top_degree(static_cast<int>(pair.n) + 1);
  return q;
}

bool OrbitVerdicts::all_hold() const noexcept {
  auto ok = [](const std::optional<bool>& v) { return !v.has_value() || *v; };
  return ok(routes_agree) && theorem1_holds && vanishing_low_degrees && vanishing_through_j_star &&
         ok(general_position_at_least_j) && ok(theorem5_holds);
}

namespace {

bool vanishes_through(const GradedAbelianGroup& h, int last) {
  for (int i = 0; i <= last; ++i) {
    if (!h.at(i).is_trivial()) return false;
  }
  return true;
}

}  // namespace

OrbitReport verify_theorem1(const SimplicialComplex& l, const VerifyOptions& options) {
  OrbitReport r;
  r.l = l;
  const CharacteristicPair pair = build_lambda_hat(l);
  r.n = pair.n;
  const Hyperplane pi = options.subtorus ? Hyperplane(*options.subtorus)
                                         : Hyperplane::last_coordinate(pair.n);
  if (pi.ambient_dimension() != pair.n) {
    throw Error(ErrorCode::DimensionMismatch, "subtorus covector must have length n");
  }
  r.subtorus = pi.covector();
  r.nerve_f = f_vector(pair.nerve);
  r.special_count = special_vertices(pair, pi).size();

  r.checks.star_condition = check_star_condition(pair);
  r.checks.isolated_fixed_points = has_isolated_fixed_points(pair, pi);
  r.checks.isolated_by_weights = r.checks.star_condition && isolated_by_weights(pair, pi);
  r.checks.connected_stabilizers = has_connected_stabilizers(pair, pi);

  const SimplicialComplex ks = kspec(pair, pi);
  r.kspec_dim = ks.dimension();
  r.kspec_f = f_vector(ks);
  r.j_star = general_position_degree(pair, pi);
  r.j_star_pointwise = general_position_degree_pointwise(pair, pi);

  r.homology_l = reduced_homology(l);
  r.sigma3_l = reduced_homology(suspension(l, 3));

  if (r.checks.hypotheses()) {
    r.alexander = orbit_homology_alexander(pair, pi);
    if (pair.n <= options.direct_max_n) r.direct = orbit_homology_direct(pair, pi);
  }

  auto& v = r.verdicts;
  if (r.alexander) {
    const auto& hq = *r.alexander;
    if (r.direct) v.routes_agree = (*r.direct == hq);
    v.vanishing_low_degrees = vanishes_through(hq, 2);
    v.vanishing_through_j_star = vanishes_through(hq, r.j_star + 1);
    v.theorem1_holds = r.checks.isolated_by_weights && r.j_star == r.j_star_pointwise &&
                       groups_equal(hq, r.homology_l, 3) && hq == r.sigma3_l &&
                       v.vanishing_low_degrees;
  }
  return r;
}

OrbitReport verify_theorem5(const SimplicialComplex& m, std::uint32_t j, const VerifyOptions& options) {
  if (j == 0) throw Error(ErrorCode::BadDimension, "j must be at least 1");
  if (!ghost_vertices(m).empty()) {
    throw Error(ErrorCode::GhostVertexInput, "M must not have ghost vertices");
  }
  const SimplicialComplex l = s_operation(m, j - 1);
  OrbitReport r = verify_theorem1(l, options);
  r.m = m;
  r.j = j;
  r.sigma_m = reduced_homology(suspension(m, j + 2));
  auto& v = r.verdicts;
  v.general_position_at_least_j = r.j_star >= static_cast<int>(j);
  v.theorem5_holds = v.theorem1_holds && *v.general_position_at_least_j && r.alexander &&
                     groups_equal(*r.alexander, *r.sigma_m, 0);
  return r;
}

}  // namespace qtorbit
