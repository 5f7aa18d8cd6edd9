#pragma once

// Exact arithmetic in GF(q), q = p^m with p odd, and in its quadratic extension
// GF(q^2) = GF(q)(w) with w^2 = alpha for a fixed nonsquare alpha of GF(q).
//
// Elements of GF(q) are stored as their canonical index: the coefficient vector
// (a_0, ..., a_{m-1}) of the polynomial representative read as a base-p number
// with a_0 the most significant digit, so that integer order is the canonical
// (lexicographic, low-degree-first) element order. Elements borrow the tables of
// the Field that created them; keep the Field alive while its elements are in use.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/error.hpp"

namespace mobius {

namespace detail {

using Poly = std::vector<std::uint64_t>;  // coefficients over GF(p), lowest degree first

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly make_monic(Poly a, std::uint64_t p) {
  trim(a);
  if (a.empty()) return a;
  const std::uint64_t inv = pow_mod(a.back(), p - 2, p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

/// Remainder of a modulo a monic f.
inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  while (a.size() > n) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r = poly_mod(Poly{1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly mb = make_monic(b, p);
    Poly r = poly_mod(a, mb, p);
    a = std::move(mb);
    b = std::move(r);
  }
  return make_monic(a, p);
}

/// Ben-Or test: a monic f of degree m is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= m/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

struct FieldTables : std::enable_shared_from_this<FieldTables> {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Poly modulus;                      // monic, degree m
  std::vector<std::uint32_t> weight;  // weight[i] = p^(m-1-i), the place value of a_i
  std::vector<std::uint32_t> exp;     // exp[k] = g^k, k in [0, q-1)
  std::vector<std::int64_t> log;      // log[0] = -1
  std::vector<std::int64_t> zech;     // zech[k] = log(1 + g^k), -1 when 1 + g^k = 0
  std::vector<std::uint32_t> neg;
  std::uint32_t one = 0;
  std::uint32_t alpha = 0;

  std::uint32_t order() const { return q - 1; }

  Poly to_poly(std::uint32_t v) const {
    Poly a(m, 0);
    for (std::size_t i = m; i-- > 0;) {
      a[i] = v % p;
      v /= p;
    }
    trim(a);
    return a;
  }

  std::uint32_t from_poly(const Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < a.size() && i < m; ++i) v += static_cast<std::uint32_t>(a[i]) * weight[i];
    return v;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) return (a + b) % p;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::int64_t n = order();
    const std::int64_t k = ((log[b] - log[a]) % n + n) % n;
    const std::int64_t z = zech[k];
    if (z < 0) return 0;
    return exp[(log[a] + z) % n];
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg[b]); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    if (a == 0 || b == 0) return 0;
    return exp[(log[a] + log[b]) % order()];
  }

  std::uint32_t inv(std::uint32_t a) const { return exp[(order() - log[a]) % order()]; }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return one;
    if (a == 0) return 0;
    const std::uint64_t k = static_cast<std::uint64_t>(log[a]) * (e % order()) % order();
    return exp[k];
  }

  std::uint32_t from_int(std::int64_t k) const {
    const std::int64_t r = ((k % static_cast<std::int64_t>(p)) + p) % p;
    return static_cast<std::uint32_t>(r) * weight[0];
  }
};

}  // namespace detail

class Field;

/// An element of GF(q).
class Fq {
 public:
  Fq(const detail::FieldTables* tables, std::uint32_t index) : t_(tables), v_(index) {}

  /// Position in the canonical element order, in [0, q).
  std::uint32_t index() const { return v_; }
  /// Coefficients a_0..a_{m-1} of the polynomial representative.
  std::vector<std::uint32_t> coeffs() const {
    std::vector<std::uint32_t> out(t_->m, 0);
    std::uint32_t v = v_;
    for (std::size_t i = t_->m; i-- > 0;) {
      out[i] = v % t_->p;
      v /= t_->p;
    }
    return out;
  }
  const detail::FieldTables* tables() const { return t_; }
  Field field() const;

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == t_->one; }

  Fq operator-() const { return {t_, t_->neg[v_]}; }
  friend Fq operator+(const Fq& a, const Fq& b) { return {same(a, b), a.t_->add(a.v_, b.v_)}; }
  friend Fq operator-(const Fq& a, const Fq& b) { return {same(a, b), a.t_->sub(a.v_, b.v_)}; }
  friend Fq operator*(const Fq& a, const Fq& b) { return {same(a, b), a.t_->mul(a.v_, b.v_)}; }
  friend Fq operator/(const Fq& a, const Fq& b) {
    same(a, b);
    return a * b.inverse();
  }
  Fq& operator+=(const Fq& b) { return *this = *this + b; }
  Fq& operator-=(const Fq& b) { return *this = *this - b; }
  Fq& operator*=(const Fq& b) { return *this = *this * b; }

  Fq inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(q)");
    return {t_, t_->inv(v_)};
  }
  Fq pow(std::uint64_t e) const { return {t_, t_->pow(v_, e)}; }

  friend bool operator==(const Fq& a, const Fq& b) { return a.t_ == b.t_ && a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Fq& a, const Fq& b) {
    same(a, b);
    return a.v_ <=> b.v_;
  }

 private:
  static const detail::FieldTables* same(const Fq& a, const Fq& b) {
    if (a.t_ != b.t_) throw Error(ErrorKind::MixedFields, "operands belong to different fields");
    return a.t_;
  }

  const detail::FieldTables* t_;
  std::uint32_t v_;
};

/// An element x + y*w of GF(q^2), w^2 = alpha.
class Fq2 {
 public:
  Fq2(const Fq& x) : x_(x), y_(x.tables(), 0) {}  // NOLINT: GF(q) embeds in GF(q^2)
  Fq2(const Fq& x, const Fq& y) : x_(x), y_(y) {
    if (x.tables() != y.tables()) throw Error(ErrorKind::MixedFields, "components belong to different fields");
  }

  const Fq& x() const { return x_; }
  const Fq& y() const { return y_; }
  const detail::FieldTables* tables() const { return x_.tables(); }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool in_base_field() const { return y_.is_zero(); }

  Fq2 operator-() const { return {-x_, -y_}; }
  friend Fq2 operator+(const Fq2& a, const Fq2& b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
  friend Fq2 operator-(const Fq2& a, const Fq2& b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
  friend Fq2 operator*(const Fq2& a, const Fq2& b) {
    const Fq alpha(a.tables(), a.tables()->alpha);
    return {a.x_ * b.x_ + alpha * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_};
  }
  friend Fq2 operator/(const Fq2& a, const Fq2& b) { return a * b.inverse(); }
  Fq2& operator+=(const Fq2& b) { return *this = *this + b; }
  Fq2& operator-=(const Fq2& b) { return *this = *this - b; }
  Fq2& operator*=(const Fq2& b) { return *this = *this * b; }

  Fq2 conj() const { return {x_, -y_}; }
  Fq norm() const {
    const Fq alpha(tables(), tables()->alpha);
    return x_ * x_ - alpha * y_ * y_;
  }
  Fq trace() const { return x_ + x_; }

  Fq2 inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(q^2)");
    const Fq n = norm().inverse();
    return {x_ * n, -y_ * n};
  }
  Fq2 pow(std::uint64_t e) const {
    Fq2 r(Fq(tables(), tables()->one));
    Fq2 b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Fq2& a, const Fq2& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  friend std::strong_ordering operator<=>(const Fq2& a, const Fq2& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.y_ <=> b.y_;
  }

 private:
  Fq x_;
  Fq y_;
};

/// The tower GF(p) < GF(q) < GF(q^2) with a fixed modulus and a fixed nonsquare alpha.
/// Cheap to copy; copies share the same tables.
class Field {
 public:
  /// Builds GF(p^m). Without a modulus the lexicographically smallest monic irreducible
  /// polynomial (low-degree coefficients compared first) is used; without alpha the
  /// smallest nonsquare in canonical order. modulus lists m+1 coefficients, lowest
  /// degree first, and must be monic; alpha lists the m coefficients of an element.
  static Field make(std::int64_t p, std::int64_t m,
                    std::optional<std::vector<std::int64_t>> modulus = std::nullopt,
                    std::optional<std::vector<std::int64_t>> alpha = std::nullopt);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t m() const { return t_->m; }
  std::uint32_t q() const { return t_->q; }
  std::vector<std::uint32_t> modulus() const { return {t_->modulus.begin(), t_->modulus.end()}; }

  Fq zero() const { return {t_.get(), 0}; }
  Fq one() const { return {t_.get(), t_->one}; }
  Fq alpha() const { return {t_.get(), t_->alpha}; }
  Fq from_int(std::int64_t k) const { return {t_.get(), t_->from_int(k)}; }
  /// Element with the given canonical index in [0, q).
  Fq element(std::uint32_t index) const {
    if (index >= q()) throw Error(ErrorKind::Parse, "element index out of range");
    return {t_.get(), index};
  }
  Fq from_coeffs(const std::vector<std::int64_t>& coeffs) const;

  Fq2 zero2() const { return Fq2(zero()); }
  Fq2 one2() const { return Fq2(one()); }
  /// w = sqrt(alpha), the generator of GF(q^2) over GF(q).
  Fq2 w() const { return {zero(), one()}; }

  /// All of GF(q), in canonical order.
  std::vector<Fq> elements() const {
    std::vector<Fq> out;
    out.reserve(q());
    for (std::uint32_t i = 0; i < q(); ++i) out.emplace_back(t_.get(), i);
    return out;
  }
  /// All of GF(q^2), ordered by (x, y).
  std::vector<Fq2> ext_elements() const {
    std::vector<Fq2> out;
    out.reserve(std::size_t{q()} * q());
    for (std::uint32_t i = 0; i < q(); ++i) {
      for (std::uint32_t j = 0; j < q(); ++j) out.emplace_back(Fq(t_.get(), i), Fq(t_.get(), j));
    }
    return out;
  }

  /// -1 is a square in GF(q) iff q = 1 mod 4.
  bool minus_one_is_square() const { return q() % 4 == 1; }

  const detail::FieldTables* tables() const { return t_.get(); }

  friend bool operator==(const Field& a, const Field& b) { return a.t_ == b.t_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  friend class Fq;

  std::shared_ptr<const detail::FieldTables> t_;
};

inline Field Fq::field() const { return Field(t_->shared_from_this()); }

inline Fq Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() != m()) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(m()) + " coefficients");
  }
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::int64_t p = t_->p;
    v += static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p) * t_->weight[i];
  }
  return {t_.get(), v};
}

inline Field Field::make(std::int64_t p, std::int64_t m, std::optional<std::vector<std::int64_t>> modulus,
                         std::optional<std::vector<std::int64_t>> alpha) {
  if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
  if (p < 2 || !detail::is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  }
  if (m < 1) throw Error(ErrorKind::InvalidDegree, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1u << 24)) throw Error(ErrorKind::BoundExceeded, "q is beyond desk scale");
  }

  auto t = std::make_shared<detail::FieldTables>();
  t->p = static_cast<std::uint32_t>(p);
  t->m = static_cast<std::uint32_t>(m);
  t->q = static_cast<std::uint32_t>(q);
  t->weight.assign(t->m, 1);
  for (std::size_t i = t->m - 1; i-- > 0;) t->weight[i] = t->weight[i + 1] * t->p;
  t->one = t->weight[0];

  if (modulus) {
    if (modulus->size() != t->m + 1) {
      throw Error(ErrorKind::InvalidDegree, "modulus must have m+1 coefficients");
    }
    detail::Poly f;
    for (auto c : *modulus) f.push_back(static_cast<std::uint64_t>(((c % p) + p) % p));
    if (f.back() != 1) throw Error(ErrorKind::InvalidDegree, "modulus must be monic of degree m");
    if (!detail::is_irreducible(f, t->p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
    t->modulus = std::move(f);
  } else {
    // Candidates enumerated by (a_0, ..., a_{m-1}) with a_0 most significant.
    for (std::uint64_t n = 0; n < q; ++n) {
      detail::Poly f(t->m + 1, 0);
      std::uint64_t v = n;
      for (std::size_t i = t->m; i-- > 0;) {
        f[i] = v % t->p;
        v /= t->p;
      }
      f[t->m] = 1;
      if (detail::is_irreducible(f, t->p)) {
        t->modulus = std::move(f);
        break;
      }
    }
  }

  const std::uint32_t order = t->q - 1;
  t->log.assign(t->q, -1);
  t->exp.assign(order, 0);
  // Primitive element: first candidate in canonical order whose powers cover GF(q)*.
  for (std::uint32_t g = 1; g < t->q; ++g) {
    const detail::Poly gp = t->to_poly(g);
    detail::Poly cur{1};
    std::uint32_t k = 0;
    bool primitive = true;
    std::fill(t->log.begin(), t->log.end(), -1);
    while (k < order) {
      const std::uint32_t v = t->from_poly(cur);
      if (t->log[v] >= 0) {
        primitive = false;
        break;
      }
      t->log[v] = k;
      t->exp[k] = v;
      cur = detail::poly_mulmod(cur, gp, t->modulus, t->p);
      ++k;
    }
    if (primitive) break;
  }

  t->neg.assign(t->q, 0);
  for (std::uint32_t v = 0; v < t->q; ++v) {
    detail::Poly a(t->m, 0);
    std::uint32_t r = v;
    for (std::size_t i = t->m; i-- > 0;) {
      a[i] = (t->p - r % t->p) % t->p;
      r /= t->p;
    }
    t->neg[v] = t->from_poly(a);
  }
  t->zech.assign(order, -1);
  for (std::uint32_t k = 0; k < order; ++k) {
    detail::Poly a = t->to_poly(t->exp[k]);
    if (a.empty()) a.push_back(0);
    a[0] = (a[0] + 1) % t->p;
    detail::trim(a);
    const std::uint32_t v = t->from_poly(a);
    t->zech[k] = t->log[v];
  }

  const std::uint64_t half = order / 2;
  if (alpha) {
    Field tmp(t);
    const Fq a = tmp.from_coeffs(*alpha);
    if (a.is_zero() || a.pow(half) != -tmp.one()) {
      throw Error(ErrorKind::AlphaIsSquare, "alpha must be a nonsquare of GF(q)");
    }
    t->alpha = a.index();
  } else {
    for (std::uint32_t v = 1; v < t->q; ++v) {
      if (t->pow(v, half) != t->one) {
        t->alpha = v;
        break;
      }
    }
  }
  return Field(std::move(t));
}

// ---- Galois machinery -------------------------------------------------------

/// z^q, computed as x - y*w.
inline Fq2 conj(const Fq2& z) { return z.conj(); }
inline Fq norm(const Fq2& z) { return z.norm(); }
inline Fq trace(const Fq2& z) { return z.trace(); }

/// Euler criterion. 0 counts as a square.
inline bool is_square(const Fq& x) {
  if (x.is_zero()) return true;
  return x.pow((x.tables()->q - 1) / 2).is_one();
}

/// Euler criterion in GF(q^2), exponent (q^2 - 1)/2. 0 counts as a square.
inline bool is_square(const Fq2& z) {
  if (z.is_zero()) return true;
  const std::uint64_t q = z.tables()->q;
  const Fq2 e = z.pow((q * q - 1) / 2);
  return e.in_base_field() && e.x().is_one();
}

/// Canonical square root in GF(q): the smaller of {r, -r}.
inline std::optional<Fq> sqrt(const Fq& x) {
  if (x.is_zero()) return x;
  const auto* t = x.tables();
  const std::int64_t l = t->log[x.index()];
  if (l % 2 != 0) return std::nullopt;
  const Fq r(t, t->exp[l / 2]);
  const Fq nr = -r;
  return r < nr ? r : nr;
}

inline Fq2 canonical_root(const Fq2& r) {
  const Fq2 nr = -r;
  return r < nr ? r : nr;
}

/// Square root of a GF(q) element inside GF(q^2); always exists.
inline Fq2 sqrt_ext(const Fq& x) {
  if (auto r = sqrt(x)) return Fq2(*r);
  const Fq alpha(x.tables(), x.tables()->alpha);
  const Fq y = *sqrt(x / alpha);
  return canonical_root(Fq2(Fq(x.tables(), 0), y));
}

/// Canonical square root in GF(q^2), if one exists.
inline std::optional<Fq2> sqrt(const Fq2& z) {
  if (z.in_base_field()) return sqrt_ext(z.x());
  // (a + b w)^2 = (a^2 + alpha b^2) + 2ab w; a^2 is a root of T^2 - x T + alpha y^2 / 4.
  const auto s = sqrt(z.norm());
  if (!s) return std::nullopt;
  const Fq two = Fq(z.tables(), z.tables()->from_int(2));
  for (const Fq& sign : {*s, -*s}) {
    const Fq a2 = (z.x() + sign) / two;
    if (a2.is_zero()) continue;
    if (auto a = sqrt(a2)) {
      const Fq b = z.y() / (two * *a);
      return canonical_root(Fq2(*a, b));
    }
  }
  return std::nullopt;
}

namespace detail {

template <typename T>
std::uint64_t order_in_group(const T& x, std::uint64_t group_order) {
  std::uint64_t n = group_order;
  for (std::uint64_t f : prime_factors(group_order)) {
    while (n % f == 0) {
      const T y = x.pow(n / f);
      bool is_one;
      if constexpr (std::is_same_v<T, Fq2>) {
        is_one = y.in_base_field() && y.x().is_one();
      } else {
        is_one = y.is_one();
      }
      if (!is_one) break;
      n /= f;
    }
  }
  return n;
}

}  // namespace detail

/// Smallest k >= 1 with x^k = 1.
inline std::uint64_t mult_order(const Fq& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "0 has no multiplicative order");
  return detail::order_in_group(x, x.tables()->q - 1);
}

inline std::uint64_t mult_order(const Fq2& z) {
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "0 has no multiplicative order");
  const std::uint64_t q = z.tables()->q;
  return detail::order_in_group(z, q * q - 1);
}

// ---- text forms ---------------------------------------------------------------
//
// Fq:  "a" for m = 1, "a0,a1,...,a_{m-1}" otherwise.
// Fq2: "X+Y*w".

inline std::string to_string(const Fq& a) {
  std::string out;
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

inline std::string to_string(const Fq2& z) { return to_string(z.x()) + "+" + to_string(z.y()) + "*w"; }

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int(std::string_view s) {
  s = strip(s);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty integer");
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorKind::Parse, "bad integer");
  std::int64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw Error(ErrorKind::Parse, "bad integer '" + std::string(s) + "'");
    v = v * 10 + (ch - '0');
    if (v > (std::int64_t{1} << 40)) throw Error(ErrorKind::Parse, "integer too large");
  }
  return negative ? -v : v;
}

}  // namespace detail

/// Comma-separated integer list, as used for coefficient vectors.
inline std::vector<std::int64_t> parse_coeffs(std::string_view s) {
  std::vector<std::int64_t> out;
  while (true) {
    const auto pos = s.find(',');
    out.push_back(detail::parse_int(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

inline Fq parse_fq(const Field& f, std::string_view s) { return f.from_coeffs(parse_coeffs(s)); }

/// Accepts "X+Y*w" and, for convenience, a bare "X".
inline Fq2 parse_fq2(const Field& f, std::string_view s) {
  s = detail::strip(s);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty GF(q^2) literal");
  // The separator is the first '+' that is not a leading sign.
  const auto plus = s.find('+', 1);
  if (plus == std::string_view::npos) {
    if (s.find('w') != std::string_view::npos) throw Error(ErrorKind::Parse, "bad GF(q^2) literal");
    return Fq2(parse_fq(f, s));
  }
  std::string_view ypart = detail::strip(s.substr(plus + 1));
  if (ypart.size() < 2 || ypart.substr(ypart.size() - 2) != "*w") {
    throw Error(ErrorKind::Parse, "expected X+Y*w, got '" + std::string(s) + "'");
  }
  ypart.remove_suffix(2);
  return {parse_fq(f, s.substr(0, plus)), parse_fq(f, ypart)};
}

// ---- sampling -----------------------------------------------------------------

template <typename Rng>
Fq random_fq(const Field& f, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  return f.element(d(rng));
}

template <typename Rng>
Fq2 random_fq2(const Field& f, Rng& rng) {
  return {random_fq(f, rng), random_fq(f, rng)};
}

}  // namespace mobius
