#pragma once

// Points, circles and Moebius transformations of the Miquelian plane M(q).
//
// Points are GF(q^2) plus a point at infinity. Circles come in two types:
//   B1(c, r): N(z - c) = r,             c in GF(q^2), r in GF(q) \ {0}
//   B2(c, r): trace(conj(c) z) = r,     c in GF(q^2) \ {0}, r in GF(q), plus infinity
// B2 parameters are only defined up to a GF(q)* scalar; they are stored scaled so
// that the first nonzero entry of (c.x, c.y, r) is 1.

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/error.hpp"
#include "mobius/gf.hpp"

namespace mobius {

class Point {
 public:
  Point(const Fq2& z) : z_(z) {}  // NOLINT: finite points convert implicitly
  static Point infinity() { return Point(); }

  bool is_infinity() const { return !z_.has_value(); }
  const Fq2& z() const {
    if (!z_) throw Error(ErrorKind::Parse, "the point at infinity has no coordinate");
    return *z_;
  }

  friend bool operator==(const Point& a, const Point& b) { return a.z_ == b.z_; }
  // Finite points in canonical order, infinity last.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) {
      return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
    }
    return *a.z_ <=> *b.z_;
  }

 private:
  Point() = default;
  std::optional<Fq2> z_;
};

enum class CircleType { kFirst = 1, kSecond = 2 };

class Circle {
 public:
  static Circle type1(const Fq2& c, const Fq& r) {
    if (r.is_zero()) throw Error(ErrorKind::InvalidCircle, "first-type circle needs r != 0");
    return Circle(CircleType::kFirst, c, r);
  }

  static Circle type2(const Fq2& c, const Fq& r) {
    if (c.is_zero()) throw Error(ErrorKind::InvalidCircle, "second-type circle needs c != 0");
    const Fq lead = !c.x().is_zero() ? c.x() : c.y();
    const Fq s = lead.inverse();
    return Circle(CircleType::kSecond, Fq2(c.x() * s, c.y() * s), r * s);
  }

  CircleType type() const { return type_; }
  bool is_first() const { return type_ == CircleType::kFirst; }
  bool is_second() const { return type_ == CircleType::kSecond; }
  const Fq2& c() const { return c_; }
  const Fq& r() const { return r_; }

  friend bool operator==(const Circle& a, const Circle& b) {
    return a.type_ == b.type_ && a.c_ == b.c_ && a.r_ == b.r_;
  }
  friend std::strong_ordering operator<=>(const Circle& a, const Circle& b) {
    if (auto t = a.type_ <=> b.type_; t != 0) return t;
    if (auto t = a.c_ <=> b.c_; t != 0) return t;
    return a.r_ <=> b.r_;
  }

 private:
  Circle(CircleType type, const Fq2& c, const Fq& r) : type_(type), c_(c), r_(r) {}

  CircleType type_;
  Fq2 c_;
  Fq r_;
};

inline bool incident(const Point& p, const Circle& c) {
  if (c.is_first()) return !p.is_infinity() && norm(p.z() - c.c()) == c.r();
  return p.is_infinity() || trace(conj(c.c()) * p.z()) == c.r();
}

/// The q+1 points of a circle in canonical order (infinity last).
inline std::vector<Point> circle_points(const Field& f, const Circle& c) {
  std::vector<Point> out;
  for (const Fq2& z : f.ext_elements()) {
    if (incident(z, c)) out.emplace_back(z);
  }
  if (c.is_second()) out.push_back(Point::infinity());
  return out;
}

/// All q^2 + 1 points, infinity last.
inline std::vector<Point> all_points(const Field& f) {
  std::vector<Point> out;
  for (const Fq2& z : f.ext_elements()) out.emplace_back(z);
  out.push_back(Point::infinity());
  return out;
}

/// Every circle exactly once, in canonical order: first type before second.
inline std::vector<Circle> all_circles(const Field& f) {
  std::vector<Circle> out;
  const auto base = f.elements();
  const auto ext = f.ext_elements();
  out.reserve(ext.size() * (base.size() - 1) + base.size() * (base.size() + 1));
  for (const Fq2& c : ext) {
    for (std::size_t i = 1; i < base.size(); ++i) out.push_back(Circle::type1(c, base[i]));
  }
  for (const Fq2& c : ext) {
    const bool canonical = c.x().is_one() || (c.x().is_zero() && c.y().is_one());
    if (!canonical) continue;
    for (const Fq& r : base) out.push_back(Circle::type2(c, r));
  }
  return out;
}

/// The unique circle through three pairwise distinct points.
inline Circle circle_through(const Point& p1, const Point& p2, const Point& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3) throw Error(ErrorKind::CoincidentPoints, "circle_through");
  std::vector<Point> pts{p1, p2, p3};
  std::sort(pts.begin(), pts.end());
  const Fq2& a = pts[0].z();
  const Fq2& b = pts[1].z();
  const Field f = a.x().field();
  // The line through a and b: trace(conj(c) z) = r with c = w (a - b).
  const Fq2 dir = f.w() * (a - b);
  const Fq line_r = trace(conj(dir) * a);
  if (pts[2].is_infinity() || trace(conj(dir) * pts[2].z()) == line_r) return Circle::type2(dir, line_r);

  // Center c solves trace(conj(c) (a - z)) = N(a) - N(z) for z in {b, z3}.
  // With d = a - z this reads 2 d.x c.x - 2 alpha d.y c.y = N(a) - N(z).
  const Fq2& e = pts[2].z();
  const Fq two = f.from_int(2);
  const Fq2 d1 = a - b;
  const Fq2 d2 = a - e;
  const Fq m11 = two * d1.x(), m12 = -two * f.alpha() * d1.y();
  const Fq m21 = two * d2.x(), m22 = -two * f.alpha() * d2.y();
  const Fq rhs1 = norm(a) - norm(b), rhs2 = norm(a) - norm(e);
  const Fq det = m11 * m22 - m12 * m21;
  const Fq cx = (rhs1 * m22 - m12 * rhs2) / det;
  const Fq cy = (m11 * rhs2 - rhs1 * m21) / det;
  const Fq2 center(cx, cy);
  return Circle::type1(center, norm(a - center));
}

/// z -> (a z + b) / (c z + d), ad - bc != 0, stored with the first nonzero coefficient equal to 1.
class MobiusMap {
 public:
  MobiusMap(const Fq2& a, const Fq2& b, const Fq2& c, const Fq2& d) : a_(a), b_(b), c_(c), d_(d) {
    if ((a * d - b * c).is_zero()) throw Error(ErrorKind::SingularMap, "ad - bc = 0");
    Fq2 lead = a;
    for (const Fq2* v : {&a_, &b_, &c_, &d_}) {
      if (!v->is_zero()) {
        lead = *v;
        break;
      }
    }
    const Fq2 s = lead.inverse();
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
  }

  static MobiusMap identity(const Field& f) { return {f.one2(), f.zero2(), f.zero2(), f.one2()}; }

  const Fq2& a() const { return a_; }
  const Fq2& b() const { return b_; }
  const Fq2& c() const { return c_; }
  const Fq2& d() const { return d_; }

  Point operator()(const Point& p) const {
    if (c_.is_zero()) {
      if (p.is_infinity()) return Point::infinity();
      return (a_ * p.z() + b_) / d_;
    }
    if (p.is_infinity()) return a_ / c_;
    const Fq2 den = c_ * p.z() + d_;
    if (den.is_zero()) return Point::infinity();
    return (a_ * p.z() + b_) / den;
  }

  Circle operator()(const Circle& circle) const;

  MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  /// (this o other)(z) = this(other(z)).
  MobiusMap compose(const MobiusMap& o) const {
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
  }

  friend bool operator==(const MobiusMap& x, const MobiusMap& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  Fq2 a_, b_, c_, d_;
};

// A circle is the zero set of v^* H v, v = (z, 1)^T, H = [[A, beta], [conj(beta), D]]:
// B1(c, r) has A = 1, beta = -c, D = N(c) - r; B2(c, r) has A = 0, beta = c, D = -r.
// Under z -> Mz the form becomes adj(M)^* H adj(M) up to a GF(q)* factor.
inline Circle MobiusMap::operator()(const Circle& circle) const {
  const Field f = circle.r().field();
  Fq2 A = f.zero2(), beta = f.zero2(), D = f.zero2();
  if (circle.is_first()) {
    A = f.one2();
    beta = -circle.c();
    D = Fq2(norm(circle.c()) - circle.r());
  } else {
    beta = circle.c();
    D = Fq2(-circle.r());
  }
  const Fq2 bb = conj(beta);
  // adj(M) = [[d, -b], [-c, a]]
  const Fq2 h00 = A * d_ - beta * c_;
  const Fq2 h01 = -A * b_ + beta * a_;
  const Fq2 h10 = bb * d_ - D * c_;
  const Fq2 h11 = -bb * b_ + D * a_;
  const Fq2 A2 = conj(d_) * h00 - conj(c_) * h10;
  const Fq2 beta2 = conj(d_) * h01 - conj(c_) * h11;
  const Fq2 D2 = -conj(b_) * h01 + conj(a_) * h11;
  if (!A2.is_zero()) {
    const Fq a = A2.x();
    const Fq2 center = -beta2 / Fq2(a);
    return Circle::type1(center, norm(center) - D2.x() / a);
  }
  return Circle::type2(beta2, -D2.x());
}

namespace detail {

// S with S(z1) = 0, S(z2) = infinity, S(z3) = 1.
inline MobiusMap to_zero_inf_one(const Field& f, const Point& z1, const Point& z2, const Point& z3) {
  const Fq2 one = f.one2(), zero = f.zero2();
  if (z1.is_infinity()) return {zero, z3.z() - z2.z(), one, -z2.z()};
  if (z2.is_infinity()) return {one, -z1.z(), zero, z3.z() - z1.z()};
  if (z3.is_infinity()) return {one, -z1.z(), one, -z2.z()};
  const Fq2 k1 = z3.z() - z2.z();
  const Fq2 k2 = z3.z() - z1.z();
  return {k1, -z1.z() * k1, k2, -z2.z() * k2};
}

}  // namespace detail

/// The unique Moebius map sending src[i] to dst[i].
inline MobiusMap mobius_from_three_points(const Field& f, const std::array<Point, 3>& src,
                                          const std::array<Point, 3>& dst) {
  for (const auto* t : {&src, &dst}) {
    if ((*t)[0] == (*t)[1] || (*t)[0] == (*t)[2] || (*t)[1] == (*t)[2]) {
      throw Error(ErrorKind::CoincidentPoints, "mobius_from_three_points");
    }
  }
  const MobiusMap s = detail::to_zero_inf_one(f, src[0], src[1], src[2]);
  const MobiusMap t = detail::to_zero_inf_one(f, dst[0], dst[1], dst[2]);
  return t.inverse().compose(s);
}

template <typename Rng>
MobiusMap random_mobius(const Field& f, Rng& rng) {
  while (true) {
    const Fq2 a = random_fq2(f, rng), b = random_fq2(f, rng), c = random_fq2(f, rng), d = random_fq2(f, rng);
    if (!(a * d - b * c).is_zero()) return {a, b, c, d};
  }
}

// ---- text forms -----------------------------------------------------------------

inline std::string to_string(const Point& p) { return p.is_infinity() ? "infinity" : to_string(p.z()); }

inline std::string to_string(const Circle& c) {
  return std::string(c.is_first() ? "B1" : "B2") + "(c=" + to_string(c.c()) + ",r=" + to_string(c.r()) + ")";
}

inline Point parse_point(const Field& f, std::string_view s) {
  s = detail::strip(s);
  if (s == "inf" || s == "infinity") return Point::infinity();
  return parse_fq2(f, s);
}

/// Parses "B1(c=<Fq2>,r=<Fq>)" or "B2(c=<Fq2>,r=<Fq>)". B2 input is canonicalized.
inline Circle parse_circle(const Field& f, std::string_view s) {
  s = detail::strip(s);
  const auto bad = [&] { return Error(ErrorKind::Parse, "bad circle literal '" + std::string(s) + "'"); };
  if (s.size() < 4 || s[0] != 'B' || (s[1] != '1' && s[1] != '2') || s[2] != '(' || s.back() != ')') throw bad();
  std::string_view body = s.substr(3, s.size() - 4);
  if (body.substr(0, 2) != "c=") throw bad();
  const auto sep = body.rfind(",r=");
  if (sep == std::string_view::npos || sep < 2) throw bad();
  const Fq2 c = parse_fq2(f, body.substr(2, sep - 2));
  const Fq r = parse_fq(f, body.substr(sep + 3));
  return s[1] == '1' ? Circle::type1(c, r) : Circle::type2(c, r);
}

}  // namespace mobius
