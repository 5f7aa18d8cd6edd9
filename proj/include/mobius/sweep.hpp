#pragma once

// Families of carrier pairs used for regression sweeps.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mobius/chains.hpp"
#include "mobius/error.hpp"
#include "mobius/gf.hpp"
#include "mobius/plane.hpp"
#include "mobius/position.hpp"

namespace mobius {

enum class SweepMode { kTangent, kIntersecting, kDisjoint };

inline SweepMode parse_sweep_mode(const std::string& s) {
  if (s == "tangent") return SweepMode::kTangent;
  if (s == "intersecting") return SweepMode::kIntersecting;
  if (s == "disjoint") return SweepMode::kDisjoint;
  throw Error(ErrorKind::Parse, "unknown sweep mode '" + s + "'");
}

/// GF(q) with default modulus and alpha, q an odd prime power.
inline Field field_for_q(std::int64_t q) {
  if (q < 3) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not an odd prime power");
  const auto primes = detail::prime_factors(static_cast<std::uint64_t>(q));
  if (primes.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  std::int64_t m = 0;
  for (std::int64_t r = q; r > 1; r /= static_cast<std::int64_t>(primes[0])) ++m;
  return Field::make(static_cast<std::int64_t>(primes[0]), m);
}

/// Carrier pairs for one sweep row:
///   tangent       the standard pair and one seeded random Moebius image of it
///   intersecting  every pair of distinct second-type circles through 0 and infinity
///   disjoint      B1(0, 1) against every circle disjoint from it
inline std::vector<std::pair<Circle, Circle>> sweep_pairs(const Field& f, SweepMode mode, std::uint64_t seed) {
  std::vector<std::pair<Circle, Circle>> out;
  switch (mode) {
    case SweepMode::kTangent: {
      const auto [a, b] = standard_tangent_pair(f);
      out.emplace_back(a, b);
      std::mt19937_64 rng(seed);
      const MobiusMap t = random_mobius(f, rng);
      out.emplace_back(t(a), t(b));
      break;
    }
    case SweepMode::kIntersecting: {
      std::vector<Circle> lines;
      for (const Circle& c : all_circles(f)) {
        if (c.is_second() && c.r().is_zero()) lines.push_back(c);
      }
      for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) out.emplace_back(lines[i], lines[j]);
      }
      break;
    }
    case SweepMode::kDisjoint: {
      const Circle c1 = Circle::type1(f.zero2(), f.one());
      for (const Circle& c : all_circles(f)) {
        if (c != c1 && classify(c1, c).is_disjoint()) out.emplace_back(c1, c);
      }
      break;
    }
  }
  return out;
}

}  // namespace mobius
