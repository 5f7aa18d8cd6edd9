#pragma once

// Closed-form predictions and explicit constructions of Steiner chains for tangent,
// intersecting and disjoint carrier circles.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius/chain.hpp"
#include "mobius/error.hpp"
#include "mobius/gf.hpp"
#include "mobius/oracle.hpp"
#include "mobius/plane.hpp"
#include "mobius/position.hpp"

namespace mobius {

/// A Moebius map together with the images of the two carriers.
struct Reduction {
  MobiusMap map;
  Circle first;
  Circle second;
};

// ---- tangent carriers ----------------------------------------------------------

/// B_{-1}: z + conj(z) = -1 and B_1: z + conj(z) = 1, tangent at infinity.
inline std::pair<Circle, Circle> standard_tangent_pair(const Field& f) {
  return {Circle::type2(f.one2(), -f.one()), Circle::type2(f.one2(), f.one())};
}

inline ChainPrediction predict_tangent(const Field& f) {
  ChainPrediction pred;
  if (f.q() % 4 == 3) {
    pred.case_tag = "tangent";
    pred.exists = true;
    std::uint64_t count = 1;
    for (std::uint32_t i = 1; i < f.m(); ++i) count *= f.p();
    pred.families.push_back({f.p(), count, "z+sqrt(-1)"});
  } else {
    pred.case_tag = "tangent-minus-one-square";
  }
  return pred;
}

/// T with T(c1) = B_{-1} and T(c2) = B_1.
inline Reduction reduce_tangent_pair(const Field& f, const Circle& c1, const Circle& c2) {
  const MutualPosition pos = classify(c1, c2);
  if (!pos.is_tangent()) throw Error(ErrorKind::NotTangent, to_string(c1) + " and " + to_string(c2));
  const Point z0 = pos.points.front();
  std::vector<Point> pts;
  for (const Point& p : circle_points(f, c1)) {
    if (p != z0) pts.push_back(p);
    if (pts.size() == 2) break;
  }
  const Fq half = f.from_int(2).inverse();
  const Fq2 a = Fq2(-half);
  const MobiusMap t1 = mobius_from_three_points(f, {z0, pts[0], pts[1]}, {Point::infinity(), a, a + f.w()});
  const Circle img = t1(c2);  // z + conj(z) = r
  const Fq lambda = f.from_int(2) / (img.r() + f.one());
  const MobiusMap t2(Fq2(lambda), Fq2((lambda - f.one()) * half), f.zero2(), f.one2());
  const MobiusMap t = t2.compose(t1);
  const auto [b_minus, b_plus] = standard_tangent_pair(f);
  return {t, b_minus, b_plus};
}

namespace detail {

// The q circles B1(t w, 1/4) tangent to B_{-1} and B_1 away from infinity.
inline std::vector<Circle> standard_tangent_pencil(const Field& f) {
  const Fq quarter = f.from_int(4).inverse();
  std::vector<Circle> out;
  for (const Fq& t : f.elements()) out.push_back(Circle::type1(Fq2(f.zero(), t), quarter));
  return out;
}

inline std::vector<Circle> map_all(const MobiusMap& t, const std::vector<Circle>& circles) {
  std::vector<Circle> out;
  for (const Circle& c : circles) out.push_back(t(c));
  return out;
}

inline void check_chains(const std::vector<SteinerChain>& chains, const Circle& c1, const Circle& c2) {
  for (const auto& ch : chains) {
    const ChainReport rep = validate_chain(ch.circles, c1, c2);
    if (!rep) throw std::logic_error("constructed chain failed validation: " + rep.detail);
  }
}

}  // namespace detail

/// All chains for a tangent pair: translations by sqrt(-1) in standard position, mapped back.
inline std::vector<SteinerChain> construct_tangent_chains(const Field& f, const Circle& c1, const Circle& c2) {
  const Reduction red = reduce_tangent_pair(f, c1, c2);
  if (f.q() % 4 != 3) throw Error(ErrorKind::NoChains, "-1 is a square in GF(q); tangent carriers carry no chain");
  const Fq step = sqrt_ext(-f.one()).y();  // sqrt(-1) = step * w
  const Fq quarter = f.from_int(4).inverse();
  const MobiusMap back = red.map.inverse();
  std::set<Fq> used;
  std::vector<SteinerChain> chains;
  for (const Fq& t0 : f.elements()) {
    if (used.count(t0)) continue;
    std::vector<Circle> circles;
    Fq t = t0;
    do {
      used.insert(t);
      circles.push_back(back(Circle::type1(Fq2(f.zero(), t), quarter)));
      t = t + step;
    } while (t != t0);
    chains.push_back(make_chain(std::move(circles), c1, c2));
  }
  detail::check_chains(chains, c1, c2);
  return chains;
}

// ---- intersecting carriers -----------------------------------------------------

struct IntersectingReduction {
  MobiusMap map;
  bool common_tangents = false;  // false when gamma1 * gamma2 is a nonsquare in GF(q^2)
  Fq2 gamma1;                    // images B2(gamma1, 0), B2(gamma2, 0) through 0 and infinity
  Fq2 gamma2;
  std::optional<Fq2> gamma;  // standard pair B2(gamma, 0), B2(conj(gamma), 0)
  std::optional<Circle> first;
  std::optional<Circle> second;
};

inline IntersectingReduction reduce_intersecting_pair(const Field& f, const Circle& c1, const Circle& c2) {
  const MutualPosition pos = classify(c1, c2);
  if (!pos.is_intersecting()) throw Error(ErrorKind::NotIntersecting, to_string(c1) + " and " + to_string(c2));
  const Point& p1 = pos.points[0];
  const Point& p2 = pos.points[1];
  const Point zero(f.zero2());
  MobiusMap s = MobiusMap::identity(f);
  const bool at_zero_inf = (p1 == zero && p2.is_infinity()) || (p2 == zero && p1.is_infinity());
  if (!at_zero_inf) {
    Point third = p1;
    for (const Point& p : circle_points(f, c1)) {
      if (p != p1 && p != p2) {
        third = p;
        break;
      }
    }
    s = mobius_from_three_points(f, {p1, p2, third}, {zero, Point::infinity(), f.one2()});
  }
  const Circle a = s(c1);
  const Circle b = s(c2);
  IntersectingReduction red{s, false, a.c(), b.c(), std::nullopt, std::nullopt, std::nullopt};
  if (!is_square(a.c() * b.c())) return red;
  red.common_tangents = true;
  if (b != Circle::type2(conj(a.c()), f.zero())) {
    const Fq2 g = *sqrt(conj(b.c()) / conj(a.c()));
    red.map = MobiusMap(conj(a.c()) * g, f.zero2(), f.zero2(), f.one2()).compose(s);
  }
  red.first = red.map(c1);
  red.second = red.map(c2);
  red.gamma = red.first->c();
  if (*red.second != Circle::type2(conj(*red.gamma), f.zero())) {
    throw std::logic_error("intersecting reduction did not reach a symmetric pair");
  }
  return red;
}

namespace detail {

struct PencilFamily {
  bool first;  // centres on z = conj(z); otherwise on z = -conj(z)
  Fq radius_factor;            // r = c^2 * factor
  std::optional<Fq> generator;  // u or v, when the family carries chains
};

// Both families of common tangents of B2(gamma, 0), B2(conj(gamma), 0).
inline std::vector<PencilFamily> standard_families(const Field& f, const Fq2& gamma) {
  const Fq n = norm(gamma);
  const Fq tr = trace(gamma);
  const Fq im = gamma.y();  // gamma - conj(gamma) = 2 im w
  std::vector<PencilFamily> fams;

  PencilFamily u{true, tr * tr / (f.from_int(4) * n), std::nullopt};
  if (const auto sn = sqrt(n)) {
    const Fq two_sn = f.from_int(2) * *sn;
    if (!(two_sn - tr).is_zero()) u.generator = (two_sn + tr) / (two_sn - tr);
  }
  fams.push_back(u);

  PencilFamily v{false, im * im * f.alpha() / n, std::nullopt};
  if (!is_square(-n)) {
    const Fq root = sqrt_ext(-n).y();  // sqrt(-N(gamma)) = root * w
    if (!(root - im).is_zero()) v.generator = (root + im) / (root - im);
  }
  fams.push_back(v);
  return fams;
}

inline Circle family_circle(const Field& f, const PencilFamily& fam, const Fq& t) {
  if (fam.first) return Circle::type1(Fq2(t), t * t * fam.radius_factor);
  return Circle::type1(Fq2(f.zero(), t), t * t * f.alpha() * fam.radius_factor);
}

inline void require_standard(const Field& f, const Circle& c1, const Circle& c2) {
  if (!c1.is_second() || !c1.r().is_zero() || c2 != Circle::type2(conj(c1.c()), f.zero())) {
    throw Error(ErrorKind::NotIntersecting, "expected a pair B2(g,0), B2(conj(g),0)");
  }
  const Fq2 g = c1.c();
  if (g * g == conj(g) * conj(g)) throw Error(ErrorKind::DegenerateGamma, to_string(g));
}

}  // namespace detail

/// Chains of a standard pair (B2(gamma, 0), B2(conj(gamma), 0)): orbits of c -> u c on
/// real centres and of c -> v c on imaginary centres.
inline std::vector<SteinerChain> construct_intersecting_chains(const Field& f, const Circle& c1, const Circle& c2) {
  detail::require_standard(f, c1, c2);
  std::vector<SteinerChain> chains;
  for (const auto& fam : detail::standard_families(f, c1.c())) {
    if (!fam.generator) continue;
    std::set<Fq> used;
    for (const Fq& t0 : f.elements()) {
      if (t0.is_zero() || used.count(t0)) continue;
      std::vector<Circle> circles;
      Fq t = t0;
      do {
        used.insert(t);
        circles.push_back(detail::family_circle(f, fam, t));
        t = t * *fam.generator;
      } while (t != t0);
      chains.push_back(make_chain(std::move(circles), c1, c2));
    }
  }
  if (chains.empty()) throw Error(ErrorKind::NoChains, "neither pencil family closes into chains");
  detail::check_chains(chains, c1, c2);
  return chains;
}

inline ChainPrediction predict_intersecting(const Field& f, const Circle& c1, const Circle& c2) {
  const MutualPosition pos = classify(c1, c2);
  if (!pos.is_intersecting()) throw Error(ErrorKind::NotIntersecting, to_string(c1) + " and " + to_string(c2));
  ChainPrediction pred;
  const std::uint64_t q = f.q();
  const Fq kappa = capacitance(c1, c2);
  pred.kappa = kappa;

  const auto check = [&](std::uint64_t k, bool divides_half) {
    const bool ok = divides_half ? (k % 2 == 1 && ((q - 1) / 2) % k == 0) : ((q - 1) % k == 0 && ((q - 1) / 2) % k != 0);
    if (!ok) {
      pred.postcondition_ok = false;
      pred.postcondition_detail += "length " + std::to_string(k) + " violates the divisibility clause; ";
    }
  };
  const auto add = [&](std::uint64_t k, std::uint64_t count, const std::string& gen) {
    if (k < 3) {
      pred.postcondition_ok = false;
      pred.postcondition_detail += "generator " + gen + " has order " + std::to_string(k) + "; ";
      return;
    }
    pred.families.push_back({k, count, gen});
    pred.exists = true;
  };

  if (kappa.is_zero()) {
    pred.case_tag = "kappa-zero";
    if (f.m() % 2 == 1 && f.p() % 16 == 7) {
      const Fq s2 = *sqrt(f.from_int(2));
      const std::uint64_t k = mult_order(f.from_int(3) + f.from_int(2) * s2);
      add(k, 2 * (q - 1) / k, "3+2*sqrt(2)");
      check(k, true);
    }
    return pred;
  }
  const auto sk = sqrt(kappa);
  if (!sk) {
    pred.case_tag = "kappa-nonsquare";
    return pred;
  }
  pred.sqrt_kappa = sk;
  const Fq two = f.from_int(2);
  const auto w_of = [&](const Fq& s) -> std::optional<Fq> {
    const auto root = sqrt(s + two);
    if (!root || (two - *root).is_zero()) return std::nullopt;
    return (two + *root) / (two - *root);
  };
  pred.w_plus = w_of(*sk);
  pred.w_minus = w_of(-*sk);
  if (pred.w_plus && !pred.w_plus->is_zero()) pred.k_plus = mult_order(*pred.w_plus);
  if (pred.w_minus && !pred.w_minus->is_zero()) pred.k_minus = mult_order(*pred.w_minus);
  const bool plus_square = is_square(*sk + two);

  if (!f.minus_one_is_square()) {
    if (!plus_square) {
      pred.case_tag = "no-branch";
      return pred;
    }
    pred.case_tag = "branch-2";
    if (pred.k_plus) {
      add(*pred.k_plus, (q - 1) / *pred.k_plus, "w+");
      check(*pred.k_plus, true);
    }
    if (pred.k_minus) {
      add(*pred.k_minus, (q - 1) / *pred.k_minus, "w-");
      check(*pred.k_minus, true);
    }
    return pred;
  }
  pred.case_tag = "branch-3";
  const auto& k = plus_square ? pred.k_plus : pred.k_minus;
  if (k) {
    add(*k, (q - 1) / *k, plus_square ? "w+" : "w-");
    check(*k, false);
  }
  return pred;
}

// ---- disjoint carriers -----------------------------------------------------------

/// Existence and admissible lengths only; the criterion is phrased per starting point
/// and gives no total count. k_max = 0 means q + 1.
inline ChainPrediction predict_disjoint(const Field& f, const Circle& c1, const Circle& c2, std::uint64_t k_max = 0) {
  const MutualPosition pos = classify(c1, c2);
  if (!pos.is_disjoint()) throw Error(ErrorKind::NotDisjoint, to_string(c1) + " and " + to_string(c2));
  if (k_max == 0) k_max = f.q() + 1;
  ChainPrediction pred;
  const Fq c = capacitance(c1, c2);
  pred.kappa = c;
  const auto st = sqrt(c * (c - f.from_int(4)));
  if (!st) {
    pred.case_tag = "disjoint-no-b";
    return pred;
  }
  const Fq b = (c - f.from_int(2) + *st) / f.from_int(2);
  pred.b = b;
  if (b.is_zero() || !is_square(b)) {
    pred.case_tag = "disjoint-b-nonsquare";
    return pred;
  }
  pred.case_tag = "disjoint";
  const Fq mu1 = *sqrt(b);
  std::set<std::uint64_t> lengths;
  for (const Fq& mu : {mu1, -mu1}) {
    DisjointRoot root{mu, !is_square(-mu), std::nullopt, std::nullopt, false};
    const Fq den = f.one() + mu;
    if (root.minus_mu_nonsquare && !den.is_zero()) {
      const Fq2 num = Fq2(-mu * mu + f.from_int(6) * mu - f.one()) + Fq2(f.from_int(4) * (mu - f.one())) * sqrt_ext(-mu);
      const Fq2 xi = num / Fq2(den * den);
      root.xi = xi;
      if (!xi.is_zero()) {
        root.order = mult_order(xi);
        root.admissible = *root.order >= 3 && *root.order <= k_max;
      }
    }
    if (root.admissible) lengths.insert(*root.order);
    pred.roots.push_back(root);
  }
  for (std::uint64_t k : lengths) pred.families.push_back({k, std::nullopt, "xi"});
  pred.exists = !lengths.empty();
  return pred;
}

// ---- dispatch --------------------------------------------------------------------

inline ChainPrediction predict(const Field& f, const Circle& c1, const Circle& c2, std::uint64_t k_max = 0) {
  const MutualPosition pos = classify(c1, c2);
  if (pos.is_tangent()) {
    ChainPrediction pred = predict_tangent(f);
    pred.kappa = capacitance(c1, c2);
    return pred;
  }
  if (pos.is_intersecting()) return predict_intersecting(f, c1, c2);
  return predict_disjoint(f, c1, c2, k_max);
}

/// Circles tangent to both carriers (excluding those that touch both at one point or
/// touch a carrier at the carriers' contact point).
inline std::vector<Circle> tangent_pencil(const Field& f, const Circle& c1, const Circle& c2) {
  const MutualPosition pos = classify(c1, c2);
  std::vector<Circle> out;
  if (pos.is_tangent()) {
    out = detail::map_all(reduce_tangent_pair(f, c1, c2).map.inverse(), detail::standard_tangent_pencil(f));
  } else if (pos.is_intersecting()) {
    const IntersectingReduction red = reduce_intersecting_pair(f, c1, c2);
    if (!red.common_tangents) return out;
    const MobiusMap back = red.map.inverse();
    for (const auto& fam : detail::standard_families(f, *red.gamma)) {
      for (const Fq& t : f.elements()) {
        if (!t.is_zero()) out.push_back(back(detail::family_circle(f, fam, t)));
      }
    }
  } else {
    out = common_tangents_bruteforce(f, c1, c2).circles;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Explicit chains for tangent or intersecting carriers, in the carriers' own position.
inline std::vector<SteinerChain> construct_chains(const Field& f, const Circle& c1, const Circle& c2) {
  const MutualPosition pos = classify(c1, c2);
  if (pos.is_tangent()) return construct_tangent_chains(f, c1, c2);
  if (pos.is_disjoint()) throw Error(ErrorKind::NoChains, "no explicit construction for disjoint carriers");
  const IntersectingReduction red = reduce_intersecting_pair(f, c1, c2);
  if (!red.common_tangents) throw Error(ErrorKind::NoChains, "the carriers have no common tangent circles");
  const MobiusMap back = red.map.inverse();
  std::vector<SteinerChain> chains;
  for (const auto& ch : construct_intersecting_chains(f, *red.first, *red.second)) {
    chains.push_back(make_chain(detail::map_all(back, ch.circles), c1, c2));
  }
  detail::check_chains(chains, c1, c2);
  std::sort(chains.begin(), chains.end(),
            [](const SteinerChain& a, const SteinerChain& b) { return a.circles < b.circles; });
  return chains;
}

}  // namespace mobius
