// qtorbit command-line front end.
//
//   qtorbit dual FILE                       Alexander dual of a complex
//   qtorbit homology FILE                   reduced integer homology
//   qtorbit construct FILE                  characteristic pair λ_L̂ for L
//   qtorbit analyze FILE                    hypothesis checks for a pair file
//   qtorbit verify [FILE | --m FILE --j J]  orbit-space verification report
//   qtorbit sweep --n N --samples K         seeded batch of verify runs
//
// Exit codes: 0 verified / success, 1 a verdict failed, 2 invalid input.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qtorbit/charpair.hpp"
#include "qtorbit/error.hpp"
#include "qtorbit/homology.hpp"
#include "qtorbit/io.hpp"
#include "qtorbit/orbit.hpp"
#include "qtorbit/sampling.hpp"

namespace {

using qtorbit::Error;
using qtorbit::ErrorCode;
using qtorbit::io::Json;

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kInvalidInput = 2;

struct CliConfig {
  std::string input;
  std::string seed_complex;
  std::uint32_t j = 0;
  std::string subtorus;
  std::uint32_t direct_max_n = 5;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint32_t sample_n = 5;
  std::uint32_t samples = 10;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return qtorbit::io::parse(buf.str());
}

qtorbit::IntVector parse_covector(const std::string& text) {
  qtorbit::IntVector out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    qtorbit::Integer x;
    if (item.empty() || x.set_str(item, 10) != 0) {
      throw Error(ErrorCode::ParseError, "subtorus must be a comma-separated integer list");
    }
    out.push_back(x);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty subtorus covector");
  return out;
}

qtorbit::VerifyOptions verify_options(const CliConfig& cfg) {
  qtorbit::VerifyOptions opt;
  if (!cfg.subtorus.empty()) {
    opt.subtorus = parse_covector(cfg.subtorus);
    qtorbit::Hyperplane check(*opt.subtorus);  // primitivity
  }
  opt.direct_max_n = cfg.direct_max_n;
  return opt;
}

int cmd_dual(const CliConfig& cfg) {
  const auto k = qtorbit::io::complex_from_json(read_json(cfg.input));
  std::cout << qtorbit::io::dump_compact(qtorbit::io::to_json(qtorbit::alexander_dual(k)));
  return kOk;
}

int cmd_homology(const CliConfig& cfg) {
  const auto k = qtorbit::io::complex_from_json(read_json(cfg.input));
  const auto h = qtorbit::reduced_homology(k);
  if (cfg.format == "text") {
    std::cout << h.to_string();
  } else {
    std::cout << qtorbit::io::dump_pretty(qtorbit::io::to_json(h));
  }
  return kOk;
}

int cmd_construct(const CliConfig& cfg) {
  const auto l = qtorbit::io::complex_from_json(read_json(cfg.input));
  const auto pair = qtorbit::build_lambda_hat(l);
  const auto opt = verify_options(cfg);
  const qtorbit::Hyperplane pi =
      opt.subtorus ? qtorbit::Hyperplane(*opt.subtorus) : qtorbit::Hyperplane::last_coordinate(pair.n);
  if (pi.ambient_dimension() != pair.n) {
    throw Error(ErrorCode::DimensionMismatch, "subtorus covector must have length n");
  }
  std::cout << qtorbit::io::dump_compact(qtorbit::io::to_json(pair, pi.covector()));
  return kOk;
}

int cmd_analyze(const CliConfig& cfg) {
  auto doc = qtorbit::io::pair_from_json(read_json(cfg.input));
  if (!cfg.subtorus.empty()) doc.subtorus = parse_covector(cfg.subtorus);
  const qtorbit::Hyperplane pi(doc.subtorus);
  if (pi.ambient_dimension() != doc.pair.n) {
    throw Error(ErrorCode::DimensionMismatch, "subtorus covector must have length n");
  }
  const auto& pair = doc.pair;
  const bool star = qtorbit::check_star_condition(pair);
  const bool isolated = qtorbit::has_isolated_fixed_points(pair, pi);
  const bool connected = qtorbit::has_connected_stabilizers(pair, pi);
  const auto ks = qtorbit::kspec(pair, pi);

  Json special = Json::array();
  for (auto v : qtorbit::special_vertices(pair, pi)) {
    special.push_back(qtorbit::io::to_json(pair.nerve.ground()[v]));
  }
  Json checks;
  checks["star_condition"] = star;
  checks["isolated_fixed_points"] = isolated;
  checks["isolated_by_weights"] = star && qtorbit::isolated_by_weights(pair, pi);
  checks["connected_stabilizers"] = connected;
  Json kspec_json;
  kspec_json["dim"] = ks.dimension();
  Json f = Json::array();
  for (auto c : qtorbit::f_vector(ks).counts) f.push_back(c);
  kspec_json["f"] = std::move(f);
  kspec_json["complex"] = qtorbit::io::to_json(ks);

  Json out;
  out["n"] = pair.n;
  out["checks"] = std::move(checks);
  out["special_vertices"] = std::move(special);
  out["kspec"] = std::move(kspec_json);
  out["j_star"] = qtorbit::general_position_degree(pair, pi);
  if (star && isolated && connected) {
    out["orbit_homology"] = qtorbit::io::to_json(qtorbit::orbit_homology_alexander(pair, pi));
  } else {
    out["orbit_homology"] = nullptr;
  }
  if (cfg.format == "text") {
    std::cout << "star condition: " << (star ? "yes" : "no") << '\n'
              << "isolated fixed points: " << (isolated ? "yes" : "no") << '\n'
              << "connected stabilizers: " << (connected ? "yes" : "no") << '\n'
              << "K_spec dimension: " << ks.dimension() << '\n'
              << "j*: " << out["j_star"].get<int>() << '\n';
  } else {
    std::cout << qtorbit::io::dump_pretty(out);
  }
  return star && isolated && connected ? kOk : kVerdictFailed;
}

int cmd_verify(const CliConfig& cfg) {
  const bool have_l = !cfg.input.empty();
  const bool have_m = !cfg.seed_complex.empty();
  if (have_l == have_m) {
    throw Error(ErrorCode::ParseError, "verify takes either a complex L or --m M with --j J");
  }
  if (have_m && cfg.j == 0) throw Error(ErrorCode::ParseError, "--m requires --j >= 1");
  if (!have_m && cfg.j != 0) throw Error(ErrorCode::ParseError, "--j requires --m");
  const auto opt = verify_options(cfg);
  qtorbit::OrbitReport report =
      have_m ? qtorbit::verify_theorem5(qtorbit::io::complex_from_json(read_json(cfg.seed_complex)),
                                        cfg.j, opt)
             : qtorbit::verify_theorem1(qtorbit::io::complex_from_json(read_json(cfg.input)), opt);
  if (cfg.format == "text") {
    std::cout << qtorbit::io::to_text(report);
  } else {
    std::cout << qtorbit::io::dump_pretty(qtorbit::io::to_json(report));
  }
  return report.verdicts.all_hold() ? kOk : kVerdictFailed;
}

int cmd_sweep(const CliConfig& cfg) {
  const auto opt = verify_options(cfg);
  std::mt19937_64 rng(cfg.seed);
  Json results = Json::array();
  std::size_t failures = 0;
  for (std::uint32_t s = 0; s < cfg.samples; ++s) {
    const auto l = qtorbit::random_neighborly_complex(cfg.sample_n, rng);
    const auto report = qtorbit::verify_theorem1(l, opt);
    const bool ok = report.verdicts.all_hold();
    if (!ok) ++failures;
    Json row;
    row["L"] = qtorbit::io::to_json(l);
    row["verified"] = ok;
    row["routes_agree"] =
        report.verdicts.routes_agree ? Json(*report.verdicts.routes_agree) : Json(nullptr);
    row["j_star"] = report.j_star;
    results.push_back(std::move(row));
  }
  Json out;
  out["n"] = cfg.sample_n;
  out["samples"] = cfg.samples;
  out["seed"] = cfg.seed;
  out["failures"] = failures;
  out["results"] = std::move(results);
  std::cout << qtorbit::io::dump_pretty(out);
  return failures == 0 ? kOk : kVerdictFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasitoric orbit-space homology toolkit"};
  app.require_subcommand(1);
  CliConfig cfg;
  int (*handler)(const CliConfig&) = nullptr;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* dual = app.add_subcommand("dual", "Combinatorial Alexander dual of a complex");
  dual->add_option("input", cfg.input, "Complex JSON file")->required();
  dual->callback([&] { handler = cmd_dual; });

  auto* homology = app.add_subcommand("homology", "Reduced integer homology of a complex");
  homology->add_option("input", cfg.input, "Complex JSON file")->required();
  add_format(homology);
  homology->callback([&] { handler = cmd_homology; });

  auto* construct = app.add_subcommand("construct", "Characteristic pair built from L");
  construct->add_option("input", cfg.input, "Complex JSON file")->required();
  construct->add_option("--subtorus", cfg.subtorus, "Covector p, e.g. 0,0,1");
  construct->callback([&] { handler = cmd_construct; });

  auto* analyze = app.add_subcommand("analyze", "Subtorus checks and j* for a pair file");
  analyze->add_option("input", cfg.input, "Characteristic pair JSON file")->required();
  analyze->add_option("--subtorus", cfg.subtorus, "Override the file's covector");
  add_format(analyze);
  analyze->callback([&] { handler = cmd_analyze; });

  auto* verify = app.add_subcommand("verify", "Verify the orbit-space homology for L");
  verify->add_option("input", cfg.input, "Complex L");
  verify->add_option("--m", cfg.seed_complex, "Seed complex M (L = s^(j-1)(M))");
  verify->add_option("--j", cfg.j, "General position degree j >= 1");
  verify->add_option("--subtorus", cfg.subtorus, "Covector p, e.g. 0,0,1");
  verify->add_option("--direct-max-n", cfg.direct_max_n, "Largest n for the direct route");
  add_format(verify);
  verify->callback([&] { handler = cmd_verify; });

  auto* sweep = app.add_subcommand("sweep", "Verify seeded random complexes");
  sweep->add_option("--n", cfg.sample_n, "Number of vertices")->check(CLI::Range(2, 8));
  sweep->add_option("--samples", cfg.samples, "Number of samples");
  sweep->add_option("--seed", cfg.seed, "Random seed");
  sweep->add_option("--subtorus", cfg.subtorus, "Covector p");
  sweep->add_option("--direct-max-n", cfg.direct_max_n, "Largest n for the direct route");
  sweep->callback([&] { handler = cmd_sweep; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    return handler(cfg);
  } catch (const Error& e) {
    std::cerr << "error (" << qtorbit::to_string(e.code()) << "): " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}
