// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mobius/chains.hpp"
#include "mobius/oracle.hpp"

namespace {

using namespace mobius;
using Histogram = std::map<std::uint64_t, std::uint64_t>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

Histogram totals(const ChainPrediction& pred) {
  Histogram out;
  for (const auto& f : pred.families) out[f.length] += f.count.value_or(0);
  return out;
}

std::vector<Circle> lines_through_zero(const Field& f) {
  std::vector<Circle> out;
  for (const Circle& c : all_circles(f)) {
    if (c.is_second() && c.r().is_zero()) out.push_back(c);
  }
  return out;
}

Outcome example_m31() {
  Outcome o;
  const Field f = Field::make(31, 1, std::nullopt, std::vector<std::int64_t>{30});
  const Circle c1 = Circle::type1(Fq2(f.from_int(8), f.from_int(3)), f.from_int(14));
  const Circle c2 = Circle::type2(Fq2(f.from_int(12), f.from_int(5)), f.from_int(17));
  const ChainPrediction pred = predict(f, c1, c2);
  o.require(pred.kappa && *pred.kappa == f.from_int(2), "kappa != 2");
  o.require(pred.sqrt_kappa && *pred.sqrt_kappa == f.from_int(8), "sqrt(kappa) != 8");
  o.require(pred.w_plus && pred.w_minus &&
                std::set<Fq>{*pred.w_plus, *pred.w_minus} == std::set<Fq>{f.from_int(9), f.from_int(8)},
            "w-pair != {9, 8}");
  o.require(pred.k_plus && pred.k_minus &&
                std::set<std::uint64_t>{*pred.k_plus, *pred.k_minus} == std::set<std::uint64_t>{15, 5},
            "orders != {15, 5}");
  const Histogram expected{{15, 2}, {5, 6}};
  o.require(totals(pred) == expected, "prediction != {(15,2),(5,6)}");
  const ChainCensus census = chain_census_bruteforce(f, c1, c2);
  o.require(census.pencil_size == 60, "pencil size " + std::to_string(census.pencil_size));
  o.require(census.histogram == expected, "census differs from {(15,2),(5,6)}");
  o.require(compare(pred, census).agree, "compare reports a mismatch");
  return o;
}

Outcome tangent_census() {
  Outcome o;
  const auto run = [&](std::int64_t p, std::int64_t m, const Histogram& expected) {
    const Field f = Field::make(p, m);
    const auto [bm, bp] = standard_tangent_pair(f);
    const ChainCensus census = chain_census_bruteforce(f, bm, bp);
    const std::string q = std::to_string(f.q());
    o.require(census.histogram == expected, "census mismatch at q=" + q);
    o.require(totals(predict(f, bm, bp)) == expected, "prediction mismatch at q=" + q);
  };
  run(3, 1, {{3, 1}});
  run(7, 1, {{7, 1}});
  run(11, 1, {{11, 1}});
  run(5, 1, {});
  run(3, 2, {});
  run(13, 1, {});
  run(3, 3, {{3, 9}});
  return o;
}

// Lengths allowed by the parity and divisibility clauses.
bool length_allowed(std::uint64_t q, std::uint64_t k) {
  const std::uint64_t half = (q - 1) / 2;
  if (q % 4 == 3) return k % 2 == 1 && half % k == 0;
  return half % k != 0;
}

Outcome intersecting_exhaustive() {
  Outcome o;
  std::size_t pairs = 0, nonempty = 0;
  for (int p : {3, 5, 7, 11, 13}) {
    const Field f = Field::make(p, 1);
    const auto lines = lines_through_zero(f);
    for (const Circle& a : lines) {
      for (const Circle& b : lines) {
        if (a == b) continue;
        ++pairs;
        const ChainPrediction pred = predict_intersecting(f, a, b);
        const ChainCensus census = chain_census_bruteforce(f, a, b);
        const std::string where = "q=" + std::to_string(p) + " " + to_string(a) + " " + to_string(b);
        o.require(compare(pred, census).agree, "disagreement at " + where);
        o.require(pred.postcondition_ok, "postcondition failed at " + where);
        nonempty += census.chains.empty() ? 0 : 1;
        for (const auto& [k, n] : census.histogram) {
          o.require(length_allowed(f.q(), k), "length " + std::to_string(k) + " breaks the clauses at " + where);
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(pairs) + " ordered pairs, " + std::to_string(nonempty) + " with chains" : o.detail;
  return o;
}

Outcome kappa_zero() {
  Outcome o;
  const auto kappa_zero_pairs = [](const Field& f) {
    std::vector<std::pair<Circle, Circle>> out;
    const auto lines = lines_through_zero(f);
    for (const Circle& a : lines) {
      for (const Circle& b : lines) {
        if (a != b && capacitance(a, b).is_zero()) out.emplace_back(a, b);
      }
    }
    return out;
  };
  {
    const Field f = Field::make(7, 1);
    const Fq s2 = *sqrt(f.from_int(2));
    const std::uint64_t k = mult_order(f.from_int(3) + f.from_int(2) * s2);
    const Histogram expected{{k, 2 * (f.q() - 1) / k}};
    const auto pairs = kappa_zero_pairs(f);
    o.require(!pairs.empty(), "no kappa = 0 pair in M(7)");
    for (const auto& [a, b] : pairs) {
      const ChainPrediction pred = predict_intersecting(f, a, b);
      o.require(pred.case_tag == "kappa-zero", "M(7) pair not routed to the kappa = 0 branch");
      o.require(totals(pred) == expected, "M(7) prediction differs from the formula");
      o.require(chain_census_bruteforce(f, a, b).histogram == expected, "M(7) census differs from the formula");
    }
  }
  for (int p : {3, 11}) {
    const Field f = Field::make(p, 1);
    const auto pairs = kappa_zero_pairs(f);
    o.require(!pairs.empty(), "no kappa = 0 pair in M(" + std::to_string(p) + ")");
    for (const auto& [a, b] : pairs) {
      const ChainPrediction pred = predict_intersecting(f, a, b);
      o.require(!pred.exists, "chains predicted in M(" + std::to_string(p) + ")");
      o.require(chain_census_bruteforce(f, a, b).chains.empty(), "census found chains in M(" + std::to_string(p) + ")");
    }
  }
  return o;
}

Outcome capacitance_invariance() {
  Outcome o;
  std::size_t failures = 0;
  for (int p : {5, 7, 11}) {
    const Field f = Field::make(p, 1);
    const auto circles = all_circles(f);
    std::mt19937_64 rng(1000 + p);
    for (int i = 0; i < 1000; ++i) {
      const Circle& a = circles[rng() % circles.size()];
      const Circle* b = &a;
      while (*b == a) b = &circles[rng() % circles.size()];
      const MobiusMap t = random_mobius(f, rng);
      if (capacitance(a, *b) != capacitance(t(a), t(*b))) ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " failures");
  return o;
}

Outcome structural_counts() {
  Outcome o;
  const auto counts = [&](const Field& f) {
    const std::size_t q = f.q();
    const auto circles = all_circles(f);
    std::size_t first = 0;
    for (const Circle& c : circles) first += c.is_first() ? 1 : 0;
    const std::string at = " at q=" + std::to_string(q);
    o.require(all_points(f).size() == q * q + 1, "point count" + at);
    o.require(first == q * q * (q - 1), "first-type count" + at);
    o.require(circles.size() - first == q * (q + 1), "second-type count" + at);
    for (const Circle& c : circles) {
      o.require(circle_points(f, c).size() == q + 1, "points per circle" + at);
    }
  };
  const auto unique_circle = [&](const Field& f, const std::vector<Circle>& circles, const Point& a, const Point& b,
                                 const Point& c) {
    std::size_t n = 0;
    for (const Circle& d : circles) n += incident(a, d) && incident(b, d) && incident(c, d) ? 1 : 0;
    o.require(n == 1, "M1 violated at q=" + std::to_string(f.q()));
  };
  {
    const Field f = Field::make(3, 1);
    counts(f);
    const auto pts = all_points(f);
    const auto circles = all_circles(f);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        for (std::size_t k = j + 1; k < pts.size(); ++k) unique_circle(f, circles, pts[i], pts[j], pts[k]);
      }
    }
  }
  for (int p : {7, 11}) {
    const Field f = Field::make(p, 1);
    counts(f);
    const auto pts = all_points(f);
    const auto circles = all_circles(f);
    std::mt19937_64 rng(6000 + p);
    std::size_t triples = 0;
    while (triples < 10000) {
      const Point& a = pts[rng() % pts.size()];
      const Point& b = pts[rng() % pts.size()];
      const Point& c = pts[rng() % pts.size()];
      if (a == b || a == c || b == c) continue;
      unique_circle(f, circles, a, b, c);
      ++triples;
    }
  }
  return o;
}

Outcome disjoint_predicate() {
  Outcome o;
  std::size_t pairs = 0, with_chains = 0;
  for (int p : {5, 7}) {
    const Field f = Field::make(p, 1);
    const auto circles = all_circles(f);
    for (std::size_t i = 0; i < circles.size(); ++i) {
      for (std::size_t j = i + 1; j < circles.size(); ++j) {
        if (!classify(circles[i], circles[j]).is_disjoint()) continue;
        ++pairs;
        const ChainPrediction pred = predict_disjoint(f, circles[i], circles[j]);
        const ChainCensus census = chain_census_bruteforce(f, circles[i], circles[j]);
        with_chains += census.chains.empty() ? 0 : 1;
        const CompareReport rep = compare(pred, census);
        o.require(rep.agree, "q=" + std::to_string(p) + " " + to_string(circles[i]) + " " + to_string(circles[j]) +
                                 ": " + (rep.mismatches.empty() ? "" : rep.mismatches.front()));
      }
    }
  }
  o.detail = o.pass ? std::to_string(pairs) + " unordered pairs, " + std::to_string(with_chains) + " with chains"
                    : o.detail;
  return o;
}

Outcome degenerate_rejection() {
  Outcome o;
  const Field f = Field::make(7, 1);
  const Circle c1 = Circle::type1(f.zero2(), f.one());
  const Circle c2 = Circle::type1(f.zero2(), f.from_int(2));
  std::vector<Circle> ring;
  for (auto [y, r] : {std::pair{1, 1}, std::pair{3, 4}, std::pair{6, 1}, std::pair{4, 4}}) {
    ring.push_back(Circle::type1(Fq2(f.zero(), f.from_int(y)), f.from_int(r)));
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    o.require(classify(ring[i], ring[(i + 1) % ring.size()]).is_tangent(), "ring neighbours not tangent");
    o.require(classify(ring[i], c1).is_tangent() && classify(ring[i], c2).is_tangent(), "ring circle off a carrier");
  }
  const ChainReport rep = validate_chain(ring, c1, c2);
  o.require(rep.violated == ChainClause::kContactPoints, std::string("violated clause: ") + to_string(rep.violated));
  if (o.pass) o.detail = rep.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"M(31) example reproduction", example_m31},
      {"tangent-carrier census", tangent_census},
      {"intersecting-carrier exhaustive agreement", intersecting_exhaustive},
      {"kappa = 0 branch", kappa_zero},
      {"capacitance invariance", capacitance_invariance},
      {"structural counts", structural_counts},
      {"disjoint-case predicate", disjoint_predicate},
      {"degenerate-chain rejection", degenerate_rejection},
  };
  const std::vector<double> budget_s{10, 60, 300, 60, 60, 300, 600, 10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_s[i]) {
      o.pass = false;
      o.detail = "over the " + std::to_string(static_cast<int>(budget_s[i])) + " s budget";
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %zu: %s  %s (%.2f s)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
