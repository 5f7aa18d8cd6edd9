#pragma once

// JSON records for positions, predictions, censuses and comparisons.

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "mobius/chain.hpp"
#include "mobius/chains.hpp"
#include "mobius/gf.hpp"
#include "mobius/oracle.hpp"
#include "mobius/plane.hpp"
#include "mobius/position.hpp"

namespace mobius {

using Json = nlohmann::ordered_json;

/// GF(p) values print as numbers, larger fields as coefficient strings.
inline Json to_json(const Fq& a) {
  if (a.tables()->m == 1) return a.index();
  return to_string(a);
}

template <typename T>
Json to_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Fq>) {
    return to_json(*v);
  } else if constexpr (std::is_same_v<T, Fq2> || std::is_same_v<T, Point> || std::is_same_v<T, Circle>) {
    return to_string(*v);
  } else {
    return *v;
  }
}

inline Json field_json(const Field& f) {
  return {{"p", f.p()}, {"m", f.m()}, {"q", f.q()}, {"modulus", f.modulus()}, {"alpha", to_string(f.alpha())}};
}

inline Json position_json(const MutualPosition& pos) {
  Json j{{"position", to_string(pos.kind)}};
  if (pos.is_tangent()) j["at"] = to_string(pos.points.front());
  if (pos.is_intersecting()) j["at"] = {to_string(pos.points[0]), to_string(pos.points[1])};
  j["discriminant"] = to_json(pos.discriminant);
  return j;
}

inline Json prediction_json(const ChainPrediction& pred) {
  Json fams = Json::array();
  for (const auto& f : pred.families) {
    fams.push_back({{"length", f.length}, {"count", to_json(f.count)}, {"generator", f.generator}});
  }
  Json diag{{"kappa", to_json(pred.kappa)},     {"sqrt_kappa", to_json(pred.sqrt_kappa)},
            {"w_plus", to_json(pred.w_plus)},   {"w_minus", to_json(pred.w_minus)},
            {"k_plus", to_json(pred.k_plus)},   {"k_minus", to_json(pred.k_minus)}};
  if (pred.b || !pred.roots.empty()) {
    diag["b"] = to_json(pred.b);
    Json roots = Json::array();
    for (const auto& r : pred.roots) {
      roots.push_back({{"mu", to_json(r.mu)},
                       {"minus_mu_nonsquare", r.minus_mu_nonsquare},
                       {"xi", to_json(r.xi)},
                       {"order", to_json(r.order)},
                       {"admissible", r.admissible}});
    }
    diag["roots"] = roots;
  }
  Json j{{"case", pred.case_tag}, {"exists", pred.exists}, {"families", fams}, {"diagnostics", diag}};
  j["postcondition_ok"] = pred.postcondition_ok;
  if (!pred.postcondition_ok) j["postcondition_detail"] = pred.postcondition_detail;
  return j;
}

inline Json chain_json(const SteinerChain& ch) {
  Json circles = Json::array(), contacts = Json::array(), carriers = Json::array();
  for (const auto& c : ch.circles) circles.push_back(to_string(c));
  for (const auto& p : ch.contacts) contacts.push_back(to_string(p));
  for (const auto& [a, b] : ch.carrier_contacts) carriers.push_back({to_string(a), to_string(b)});
  return {{"length", ch.length()}, {"circles", circles}, {"contacts", contacts}, {"carrier_contacts", carriers}};
}

inline Json chains_json(const std::vector<SteinerChain>& chains) {
  Json out = Json::array();
  for (const auto& ch : chains) out.push_back(chain_json(ch));
  return out;
}

inline Json histogram_json(const std::map<std::uint64_t, std::uint64_t>& h) {
  Json out = Json::array();
  for (const auto& [len, cnt] : h) out.push_back({{"length", len}, {"count", cnt}});
  return out;
}

inline Json census_json(const ChainCensus& c, bool with_chains = true) {
  Json j{{"pencil_size", c.pencil_size},
         {"excluded", c.excluded},
         {"legal_edges", c.legal_edges},
         {"circles_covered", c.circles_covered},
         {"histogram", histogram_json(c.histogram)}};
  if (with_chains) j["chains"] = chains_json(c.chains);
  return j;
}

inline Json compare_json(const CompareReport& r) {
  return {{"agree", r.agree}, {"mismatches", r.mismatches}};
}

}  // namespace mobius
