#pragma once

// Brute-force ground truth for common tangent circles and Steiner chains.
// Nothing here consults the closed-form predictions or constructions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mobius/chain.hpp"
#include "mobius/error.hpp"
#include "mobius/plane.hpp"
#include "mobius/position.hpp"

namespace mobius {

struct TangentPencil {
  std::vector<Circle> circles;  // canonical order
  std::size_t excluded = 0;     // tangent to both carriers but unusable, see below
};

/// Scans every circle of the plane for those tangent to both carriers. A circle whose
/// contact with a carrier coincides with its contact with the other carrier, or with
/// the carriers' own contact point, makes that point a contact point of three circles
/// and can never sit in a chain; such circles are counted in `excluded` only.
inline TangentPencil common_tangents_bruteforce(const Field& f, const Circle& c1, const Circle& c2) {
  if (c1 == c2) throw Error(ErrorKind::IdenticalCircles, to_string(c1));
  const auto carriers = detail::contact_of(c1, c2);
  TangentPencil out;
  for (const Circle& m : all_circles(f)) {
    if (m == c1 || m == c2) continue;
    const MutualPosition a = classify(m, c1);
    if (!a.is_tangent()) continue;
    const MutualPosition b = classify(m, c2);
    if (!b.is_tangent()) continue;
    const Point& pa = a.points.front();
    const Point& pb = b.points.front();
    if (pa == pb || (carriers && (pa == *carriers || pb == *carriers))) {
      ++out.excluded;
      continue;
    }
    out.circles.push_back(m);
  }
  return out;
}

struct ChainCensus {
  std::size_t pencil_size = 0;
  std::size_t excluded = 0;
  std::vector<SteinerChain> chains;  // ordered by smallest circle
  std::map<std::uint64_t, std::uint64_t> histogram;  // length -> number of chains
  std::size_t circles_covered = 0;
  std::size_t legal_edges = 0;
};

/// Enumerates every proper Steiner chain carried by (c1, c2). Two chains with the same
/// circle set are the same chain. max_steps bounds the cycle search.
inline ChainCensus chain_census_bruteforce(const Field& f, const Circle& c1, const Circle& c2,
                                           std::uint64_t max_steps = 50'000'000) {
  const TangentPencil pencil = common_tangents_bruteforce(f, c1, c2);
  ChainCensus census;
  census.pencil_size = pencil.circles.size();
  census.excluded = pencil.excluded;
  const auto& v = pencil.circles;
  const std::size_t n = v.size();

  const auto carriers = detail::contact_of(c1, c2);
  std::vector<std::pair<Point, Point>> touch;
  for (const Circle& m : v) touch.emplace_back(*detail::contact_of(m, c1), *detail::contact_of(m, c2));

  // An edge is legal when its contact point is not already used by either endpoint
  // against a carrier, nor by the carriers themselves.
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto p = detail::contact_of(v[i], v[j]);
      if (!p) continue;
      if (*p == touch[i].first || *p == touch[i].second || *p == touch[j].first || *p == touch[j].second) continue;
      if (carriers && *p == *carriers) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++census.legal_edges;
    }
  }

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::uint64_t steps = 0;

  // Simple cycles through `start` using only vertices above it.
  const auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> void {
    if (++steps > max_steps) throw Error(ErrorKind::BoundExceeded, "cycle search exceeded its step budget");
    for (std::size_t w : adj[u]) {
      if (w == start && path.size() >= 3) {
        std::vector<std::size_t> key = path;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) cycles.push_back(path);
        continue;
      }
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }

  std::set<Circle> covered;
  for (const auto& cyc : cycles) {
    std::vector<Circle> circles;
    for (std::size_t i : cyc) circles.push_back(v[i]);
    if (!validate_chain(circles, c1, c2)) continue;
    census.chains.push_back(make_chain(circles, c1, c2));
    covered.insert(circles.begin(), circles.end());
  }
  std::sort(census.chains.begin(), census.chains.end(),
            [](const SteinerChain& a, const SteinerChain& b) { return a.circles < b.circles; });
  for (const auto& ch : census.chains) ++census.histogram[ch.length()];
  census.circles_covered = covered.size();
  return census;
}

struct CompareReport {
  bool agree = true;
  std::vector<std::string> mismatches;
};

/// Compares predicted (length, count) totals with the census. Families without a count
/// are compared by length only.
inline CompareReport compare(const ChainPrediction& pred, const ChainCensus& census) {
  CompareReport rep;
  std::map<std::uint64_t, std::uint64_t> counted;
  std::set<std::uint64_t> uncounted;
  for (const auto& fam : pred.families) {
    if (fam.count) {
      counted[fam.length] += *fam.count;
    } else {
      uncounted.insert(fam.length);
    }
  }
  const auto fail = [&](const std::string& msg) {
    rep.agree = false;
    rep.mismatches.push_back(msg);
  };
  for (const auto& [len, cnt] : counted) {
    const auto it = census.histogram.find(len);
    const std::uint64_t got = it == census.histogram.end() ? 0 : it->second;
    if (got != cnt) {
      fail("length " + std::to_string(len) + ": predicted " + std::to_string(cnt) + " chains, census found " +
           std::to_string(got));
    }
  }
  for (std::uint64_t len : uncounted) {
    if (!counted.count(len) && !census.histogram.count(len)) {
      fail("length " + std::to_string(len) + ": predicted, census found none");
    }
  }
  for (const auto& [len, cnt] : census.histogram) {
    if (!counted.count(len) && !uncounted.count(len)) {
      fail("length " + std::to_string(len) + ": census found " + std::to_string(cnt) + " chains, none predicted");
    }
  }
  if (pred.exists != !census.histogram.empty()) {
    fail(std::string("existence: predicted ") + (pred.exists ? "chains" : "none") + ", census found " +
         std::to_string(census.chains.size()));
  }
  return rep;
}

}  // namespace mobius
