#pragma once

// Steiner chains and their validation.
//
// Circles M_1..M_k (k >= 3, distinct) form a chain for carriers C1, C2 when
//   1. M_i is tangent to M_{i+1}, indices cyclic,
//   2. every M_i is tangent to C1 and to C2,
//   3. no point is the contact point of more than two of the tangent circles involved.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mobius/error.hpp"
#include "mobius/plane.hpp"
#include "mobius/position.hpp"

namespace mobius {

struct SteinerChain {
  std::vector<Circle> circles;
  std::vector<Point> contacts;  // contacts[i] = M_i and M_{i+1}
  std::vector<std::pair<Point, Point>> carrier_contacts;  // per circle: with C1, with C2

  std::size_t length() const { return circles.size(); }
};

/// Predicted chains of one length. count is absent where only existence is claimed.
struct ChainFamily {
  std::uint64_t length = 0;
  std::optional<std::uint64_t> count;
  std::string generator;  // which element's order gives the length, e.g. "w+"
};

/// Per-root diagnostics of the disjoint-carrier criterion.
struct DisjointRoot {
  Fq mu;
  bool minus_mu_nonsquare = false;
  std::optional<Fq2> xi;
  std::optional<std::uint64_t> order;
  bool admissible = false;
};

struct ChainPrediction {
  std::string case_tag;
  bool exists = false;
  std::vector<ChainFamily> families;
  std::optional<Fq> kappa;
  std::optional<Fq> sqrt_kappa;
  std::optional<Fq> w_plus;
  std::optional<Fq> w_minus;
  std::optional<std::uint64_t> k_plus;
  std::optional<std::uint64_t> k_minus;
  std::optional<Fq> b;  // disjoint carriers only
  std::vector<DisjointRoot> roots;
  bool postcondition_ok = true;
  std::string postcondition_detail;
};

enum class ChainClause {
  kNone,
  kLength,
  kDistinct,
  kConsecutive,    // clause 1
  kCarriers,       // clause 2
  kContactPoints,  // clause 3
};

inline const char* to_string(ChainClause c) {
  switch (c) {
    case ChainClause::kNone: return "none";
    case ChainClause::kLength: return "length";
    case ChainClause::kDistinct: return "distinct circles";
    case ChainClause::kConsecutive: return "clause 1: consecutive tangency";
    case ChainClause::kCarriers: return "clause 2: tangent to both carriers";
    case ChainClause::kContactPoints: return "clause 3: contact point of more than two tangent circles";
  }
  return "unknown";
}

struct ChainReport {
  ChainClause violated = ChainClause::kNone;
  std::string detail;
  std::vector<Circle> circles;  // offending circles
  std::vector<Point> points;    // offending points

  bool ok() const { return violated == ChainClause::kNone; }
  explicit operator bool() const { return ok(); }
};

namespace detail {

inline std::optional<Point> contact_of(const Circle& a, const Circle& b) {
  if (a == b) return std::nullopt;
  const MutualPosition pos = classify(a, b);
  if (!pos.is_tangent()) return std::nullopt;
  return pos.points.front();
}

}  // namespace detail

/// Checks the chain conditions in order and reports the first violation.
inline ChainReport validate_chain(const std::vector<Circle>& circles, const Circle& c1, const Circle& c2) {
  ChainReport rep;
  const std::size_t k = circles.size();
  if (k < 3) {
    rep.violated = ChainClause::kLength;
    rep.detail = "a chain needs at least 3 circles, got " + std::to_string(k);
    return rep;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (circles[i] == circles[j]) {
        rep.violated = ChainClause::kDistinct;
        rep.detail = "circle repeated at positions " + std::to_string(i) + " and " + std::to_string(j);
        rep.circles = {circles[i]};
        return rep;
      }
    }
  }

  // Designated tangencies: who touches whom, and where.
  std::map<Point, std::set<Circle>> touching;
  for (std::size_t i = 0; i < k; ++i) {
    const Circle& a = circles[i];
    const Circle& b = circles[(i + 1) % k];
    const auto p = detail::contact_of(a, b);
    if (!p) {
      rep.violated = ChainClause::kConsecutive;
      rep.detail = "circles " + std::to_string(i) + " and " + std::to_string((i + 1) % k) + " are not tangent";
      rep.circles = {a, b};
      return rep;
    }
    touching[*p].insert(a);
    touching[*p].insert(b);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Circle& a = circles[i];
    for (const Circle* carrier : {&c1, &c2}) {
      const auto p = detail::contact_of(a, *carrier);
      if (!p) {
        rep.violated = ChainClause::kCarriers;
        rep.detail = "circle " + std::to_string(i) + " is not tangent to carrier " + to_string(*carrier);
        rep.circles = {a, *carrier};
        return rep;
      }
      touching[*p].insert(a);
      touching[*p].insert(*carrier);
    }
  }
  if (c1 != c2) {
    if (const auto p = detail::contact_of(c1, c2)) {
      touching[*p].insert(c1);
      touching[*p].insert(c2);
    }
  }
  for (const auto& [point, who] : touching) {
    if (who.size() > 2) {
      rep.violated = ChainClause::kContactPoints;
      rep.detail = "point " + to_string(point) + " is a contact point of " + std::to_string(who.size()) + " circles";
      rep.circles.assign(who.begin(), who.end());
      rep.points = {point};
      return rep;
    }
  }
  return rep;
}

/// Rotates and possibly reverses a cyclic sequence so it starts at its smallest
/// circle and continues toward the smaller of that circle's two neighbours.
inline std::vector<Circle> normalize_cycle(std::vector<Circle> circles) {
  if (circles.size() < 3) return circles;
  const auto it = std::min_element(circles.begin(), circles.end());
  std::rotate(circles.begin(), it, circles.end());
  if (circles.back() < circles[1]) std::reverse(circles.begin() + 1, circles.end());
  return circles;
}

/// Builds a SteinerChain with its contact points. Throws NotTangent if a required
/// tangency is missing; run validate_chain for the full check.
inline SteinerChain make_chain(std::vector<Circle> circles, const Circle& c1, const Circle& c2) {
  SteinerChain ch;
  ch.circles = normalize_cycle(std::move(circles));
  const std::size_t k = ch.circles.size();
  const auto need = [](const Circle& a, const Circle& b) {
    const auto p = detail::contact_of(a, b);
    if (!p) throw Error(ErrorKind::NotTangent, to_string(a) + " and " + to_string(b));
    return *p;
  };
  for (std::size_t i = 0; i < k; ++i) {
    ch.contacts.push_back(need(ch.circles[i], ch.circles[(i + 1) % k]));
    ch.carrier_contacts.emplace_back(need(ch.circles[i], c1), need(ch.circles[i], c2));
  }
  return ch;
}

}  // namespace mobius
