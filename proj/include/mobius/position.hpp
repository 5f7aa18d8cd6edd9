#pragma once

// Mutual position of two circles and the capacitance invariant.

#include <optional>
#include <string>
#include <vector>

#include "mobius/error.hpp"
#include "mobius/gf.hpp"
#include "mobius/plane.hpp"

namespace mobius {

enum class Position { kDisjoint, kTangent, kIntersecting };

inline const char* to_string(Position p) {
  switch (p) {
    case Position::kDisjoint: return "disjoint";
    case Position::kTangent: return "tangent";
    case Position::kIntersecting: return "intersecting";
  }
  return "unknown";
}

struct MutualPosition {
  Position kind;
  std::vector<Point> points;  // empty, the contact point, or the two intersection points
  std::optional<Fq> discriminant;  // absent when both circles are of the second type

  bool is_disjoint() const { return kind == Position::kDisjoint; }
  bool is_tangent() const { return kind == Position::kTangent; }
  bool is_intersecting() const { return kind == Position::kIntersecting; }
};

namespace detail {

// Roots t of X^2 - s X + prod, mapped to z = t / conj(dir) + base.
inline MutualPosition quadratic_position(const Fq& s, const Fq& prod, const Fq2& dir, const Fq2& base) {
  const Field f = s.field();
  const Fq two = f.from_int(2);
  const Fq disc = s * s - f.from_int(4) * prod;
  const Fq2 denom = Fq2(two) * conj(dir);
  if (disc.is_zero()) return {Position::kTangent, {Fq2(s) / denom + base}, disc};
  if (is_square(disc)) return {Position::kDisjoint, {}, disc};
  const Fq2 root = sqrt_ext(disc);
  return {Position::kIntersecting, {(Fq2(s) + root) / denom + base, (Fq2(s) - root) / denom + base}, disc};
}

}  // namespace detail

/// Disjoint, tangent (with contact point) or intersecting (with both points).
inline MutualPosition classify(const Circle& c1, const Circle& c2) {
  if (c1 == c2) throw Error(ErrorKind::IdenticalCircles, to_string(c1));
  if (c1.is_first() && c2.is_first()) {
    const Fq2 c = c2.c() - c1.c();
    const Fq n = norm(c);
    const Fq s = n + c1.r() - c2.r();
    if (c.is_zero()) return {Position::kDisjoint, {}, s * s};  // concentric
    return detail::quadratic_position(s, n * c1.r(), c, c1.c());
  }
  if (c1.is_first() && c2.is_second()) {
    const Fq r = c2.r() - trace(c1.c() * conj(c2.c()));
    return detail::quadratic_position(r, norm(c2.c()) * c1.r(), c2.c(), c1.c());
  }
  if (c1.is_second() && c2.is_first()) return classify(c2, c1);

  const Fq2 delta = c1.c() * conj(c2.c()) - conj(c1.c()) * c2.c();
  if (delta.is_zero()) return {Position::kTangent, {Point::infinity()}, std::nullopt};
  const Fq2 z0 = (c1.c() * Fq2(c2.r()) - c2.c() * Fq2(c1.r())) / delta;
  return {Position::kIntersecting, {Point::infinity(), z0}, std::nullopt};
}

/// The Moebius-invariant capacitance of two distinct circles.
inline Fq capacitance(const Circle& c1, const Circle& c2) {
  if (c1 == c2) throw Error(ErrorKind::IdenticalCircles, to_string(c1));
  if (c1.is_first() && c2.is_first()) {
    const Fq t = c1.r() + c2.r() - norm(c1.c() - c2.c());
    return t * t / (c1.r() * c2.r());
  }
  if (c1.is_first() && c2.is_second()) {
    const Fq t = trace(c1.c() * conj(c2.c())) - c2.r();
    return t * t / (c1.r() * norm(c2.c()));
  }
  if (c1.is_second() && c2.is_first()) return capacitance(c2, c1);
  const Fq t = trace(c1.c() * conj(c2.c()));
  return t * t / (norm(c1.c()) * norm(c2.c()));
}

/// Number of common points, counted directly; independent of classify.
inline int common_point_count(const Field& f, const Circle& c1, const Circle& c2) {
  int n = 0;
  for (const Point& p : circle_points(f, c1)) n += incident(p, c2) ? 1 : 0;
  return n;
}

}  // namespace mobius
