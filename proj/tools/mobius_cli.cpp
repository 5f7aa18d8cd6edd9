// Command-line front end: every command prints one JSON document.
//
// Exit codes: 0 success / agreement, 1 prediction and census disagree, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "mobius/chains.hpp"
#include "mobius/gf.hpp"
#include "mobius/oracle.hpp"
#include "mobius/plane.hpp"
#include "mobius/position.hpp"
#include "mobius/record.hpp"
#include "mobius/sweep.hpp"

namespace {

using mobius::Json;

struct RunConfig {
  std::int64_t p = 0;
  std::int64_t m = 1;
  std::string modulus;
  std::string alpha;
  std::uint64_t seed = 1;
  std::uint64_t kmax = 0;
  bool pretty = false;
  std::string out;
};

mobius::Field make_field(const RunConfig& cfg) {
  if (cfg.p == 0) throw mobius::Error(mobius::ErrorKind::Parse, "--p is required");
  std::optional<std::vector<std::int64_t>> modulus, alpha;
  if (!cfg.modulus.empty()) modulus = mobius::parse_coeffs(cfg.modulus);
  if (!cfg.alpha.empty()) alpha = mobius::parse_coeffs(cfg.alpha);
  return mobius::Field::make(cfg.p, cfg.m, modulus, alpha);
}

void emit(const RunConfig& cfg, const Json& j) {
  const std::string text = cfg.pretty ? j.dump(2) : j.dump();
  if (cfg.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw mobius::Error(mobius::ErrorKind::Parse, "cannot open " + cfg.out);
  f << text << "\n";
}

Json pair_json(const mobius::Circle& a, const mobius::Circle& b) {
  return Json::array({mobius::to_string(a), mobius::to_string(b)});
}

int cmd_info(const RunConfig& cfg) {
  const mobius::Field f = make_field(cfg);
  const std::uint64_t q = f.q();
  Json j = mobius::field_json(f);
  j["points"] = q * q + 1;
  j["circles_first_type"] = q * q * (q - 1);
  j["circles_second_type"] = q * (q + 1);
  j["points_per_circle"] = q + 1;
  emit(cfg, j);
  return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& s1, const std::string& s2) {
  const mobius::Field f = make_field(cfg);
  const auto c1 = mobius::parse_circle(f, s1), c2 = mobius::parse_circle(f, s2);
  Json j = mobius::position_json(mobius::classify(c1, c2));
  j["kappa"] = mobius::to_json(mobius::capacitance(c1, c2));
  emit(cfg, j);
  return 0;
}

int cmd_cap(const RunConfig& cfg, const std::string& s1, const std::string& s2) {
  const mobius::Field f = make_field(cfg);
  const auto c1 = mobius::parse_circle(f, s1), c2 = mobius::parse_circle(f, s2);
  const auto pos = mobius::classify(c1, c2);
  emit(cfg, Json{{"position", mobius::to_string(pos.kind)}, {"kappa", mobius::to_json(mobius::capacitance(c1, c2))}});
  return 0;
}

int cmd_predict(const RunConfig& cfg, const std::string& s1, const std::string& s2) {
  const mobius::Field f = make_field(cfg);
  const auto c1 = mobius::parse_circle(f, s1), c2 = mobius::parse_circle(f, s2);
  Json j{{"carriers", pair_json(c1, c2)}, {"position", mobius::to_string(mobius::classify(c1, c2).kind)}};
  j["prediction"] = mobius::prediction_json(mobius::predict(f, c1, c2, cfg.kmax));
  emit(cfg, j);
  return 0;
}

int cmd_census(const RunConfig& cfg, const std::string& s1, const std::string& s2) {
  const mobius::Field f = make_field(cfg);
  const auto c1 = mobius::parse_circle(f, s1), c2 = mobius::parse_circle(f, s2);
  Json j{{"carriers", pair_json(c1, c2)}, {"position", mobius::to_string(mobius::classify(c1, c2).kind)}};
  j["census"] = mobius::census_json(mobius::chain_census_bruteforce(f, c1, c2));
  emit(cfg, j);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& s1, const std::string& s2) {
  const mobius::Field f = make_field(cfg);
  const auto c1 = mobius::parse_circle(f, s1), c2 = mobius::parse_circle(f, s2);
  const auto pred = mobius::predict(f, c1, c2, cfg.kmax);
  const auto census = mobius::chain_census_bruteforce(f, c1, c2);
  const auto cmp = mobius::compare(pred, census);
  Json j{{"carriers", pair_json(c1, c2)}, {"position", mobius::to_string(mobius::classify(c1, c2).kind)}};
  j["prediction"] = mobius::prediction_json(pred);
  j["census"] = mobius::census_json(census, false);
  j["compare"] = mobius::compare_json(cmp);
  emit(cfg, j);
  return cmp.agree ? 0 : 1;
}

int cmd_construct(const RunConfig& cfg, const std::string& s1, const std::string& s2) {
  const mobius::Field f = make_field(cfg);
  const auto c1 = mobius::parse_circle(f, s1), c2 = mobius::parse_circle(f, s2);
  const auto chains = mobius::construct_chains(f, c1, c2);
  Json j{{"carriers", pair_json(c1, c2)}, {"position", mobius::to_string(mobius::classify(c1, c2).kind)}};
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& ch : chains) ++hist[ch.length()];
  j["histogram"] = mobius::histogram_json(hist);
  j["chains"] = mobius::chains_json(chains);
  emit(cfg, j);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& qs, const std::string& mode_text) {
  const mobius::SweepMode mode = mobius::parse_sweep_mode(mode_text);
  Json table = Json::array();
  bool all_agree = true;
  for (std::int64_t q : mobius::parse_coeffs(qs)) {
    const mobius::Field f = mobius::field_for_q(q);
    // Rows group pairs with the same case, capacitance, prediction and census.
    std::map<std::tuple<std::string, std::string, std::string, std::string>, std::uint64_t> rows;
    std::uint64_t agree = 0, disagree = 0;
    for (const auto& [c1, c2] : mobius::sweep_pairs(f, mode, cfg.seed)) {
      const auto pred = mobius::predict(f, c1, c2, cfg.kmax);
      const auto census = mobius::chain_census_bruteforce(f, c1, c2);
      const bool ok = mobius::compare(pred, census).agree;
      (ok ? agree : disagree)++;
      Json fams = mobius::prediction_json(pred)["families"];
      rows[{pred.case_tag, mobius::to_string(*pred.kappa), fams.dump(),
            mobius::histogram_json(census.histogram).dump()}]++;
    }
    Json jrows = Json::array();
    for (const auto& [key, n] : rows) {
      jrows.push_back({{"case", std::get<0>(key)},
                       {"kappa", std::get<1>(key)},
                       {"prediction", Json::parse(std::get<2>(key))},
                       {"census", Json::parse(std::get<3>(key))},
                       {"pairs", n}});
    }
    all_agree = all_agree && disagree == 0;
    table.push_back({{"q", q}, {"mode", mode_text}, {"agree", agree}, {"disagree", disagree}, {"rows", jrows}});
  }
  emit(cfg, Json{{"sweep", table}, {"all_agree", all_agree}});
  return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner chains in finite Miquelian Moebius planes"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--p", cfg.p, "characteristic (odd prime)");
  app.add_option("--m", cfg.m, "extension degree")->capture_default_str();
  app.add_option("--modulus", cfg.modulus, "modulus coefficients c0,...,cm (monic)");
  app.add_option("--alpha", cfg.alpha, "nonsquare alpha as coefficients a0,...,a_{m-1}");
  app.add_option("--seed", cfg.seed, "seed for randomized choices")->capture_default_str();
  app.add_option("--kmax", cfg.kmax, "largest chain length tried for disjoint carriers (0: q+1)");
  app.add_flag("--pretty", cfg.pretty, "indent JSON output");
  app.add_option("--out", cfg.out, "write JSON to this file instead of stdout");

  std::string c1, c2, qs = "3,5,7,11,13", mode = "intersecting";
  int rc = 0;
  const auto pair_cmd = [&](const char* name, const char* help, int (*fn)(const RunConfig&, const std::string&,
                                                                          const std::string&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("circle1", c1, "first carrier, e.g. B1(c=8+3*w,r=14)")->required();
    sub->add_option("circle2", c2, "second carrier")->required();
    sub->callback([&, fn] { rc = fn(cfg, c1, c2); });
  };
  app.add_subcommand("info", "field and plane summary")->callback([&] { rc = cmd_info(cfg); });
  pair_cmd("classify", "mutual position of two circles", cmd_classify);
  pair_cmd("cap", "capacitance of two circles", cmd_cap);
  pair_cmd("predict", "closed-form chain prediction", cmd_predict);
  pair_cmd("census", "brute-force chain census", cmd_census);
  pair_cmd("verify", "compare prediction with census", cmd_verify);
  pair_cmd("construct", "explicit chains (tangent or intersecting carriers)", cmd_construct);
  CLI::App* sweep = app.add_subcommand("sweep", "prediction vs census over many pairs");
  sweep->add_option("--qs", qs, "comma-separated odd prime powers")->capture_default_str();
  sweep->add_option("--mode", mode, "tangent, intersecting or disjoint")->capture_default_str();
  sweep->callback([&] { rc = cmd_sweep(cfg, qs, mode); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const mobius::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
