#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irrwalk/algebra/numbers.hpp"
#include "irrwalk/errors.hpp"

namespace irrwalk {

// Polynomial degree with a distinct marker for the zero polynomial.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(std::size_t d) : value_(d) {}

  static constexpr Degree neg_infinity() { return Degree{}; }

  constexpr bool is_neg_infinity() const { return !value_.has_value(); }

  std::size_t value() const {
    if (!value_) throw InvalidArgument("degree of the zero polynomial is -infinity");
    return *value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Degree& a, std::size_t d) { return a.value_ == d; }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, std::size_t d) {
    return a <=> Degree(d);
  }

  // -infinity is absorbing, as for deg(p * q).
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return Degree{};
    return Degree(*a.value_ + *b.value_);
  }

 private:
  std::optional<std::size_t> value_;
};

// Dense univariate polynomial; coeffs()[i] multiplies x^i. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
template <class T>
class Poly {
 public:
  using Coeff = T;

  Poly() = default;
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  const std::vector<T>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const { return c_.empty() ? Degree{} : Degree(c_.size() - 1); }

  const T& lc() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
  }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Multiplication by x^k.
  Poly shifted_up(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<T> v(k, T(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

 private:
  static Poly multiply(const Poly& a, const Poly& b);

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

template <>
IntPoly IntPoly::multiply(const IntPoly& a, const IntPoly& b);
template <>
RatPoly RatPoly::multiply(const RatPoly& a, const RatPoly& b);

RatPoly to_rat(const IntPoly& p);

// p = content * primitive with primitive having positive leading coefficient.
struct ContentSplit {
  Rat content;
  IntPoly primitive;
};
ContentSplit content_split(const RatPoly& p);

// Nonnegative gcd of the coefficients.
Int content(const IntPoly& p);
// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
IntPoly primitive_part(const RatPoly& p);

// Division with remainder over Q. Throws InvalidArgument on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);
// Remainder of a modulo a monic integer polynomial, computed without rational intermediates.
RatPoly rem_monic(const RatPoly& a, const IntPoly& monic_modulus);

// Exact quotient a / b in Z[x], or nullopt if b does not divide a.
std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b);
// Exact quotient over Q, or nullopt if b does not divide a.
std::optional<RatPoly> exact_div(const RatPoly& a, const RatPoly& b);

RatPoly monic(const RatPoly& p);

// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);
// Primitive gcd over Z with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Extended gcd over Q: returns (g, s, t) with s a + t b = g, g monic.
struct ExtGcd {
  RatPoly g, s, t;
};
ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b);

Int resultant(const IntPoly& a, const IntPoly& b);
Rat resultant(const RatPoly& a, const RatPoly& b);

// Yun decomposition: primitive squarefree pairwise-coprime factors with multiplicities,
// so that p = content * prod f_i^{m_i} (up to sign in the content).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

// Exact polynomial square root with positive leading coefficient, if p is a square in Q[x].
std::optional<RatPoly> poly_square_root(const RatPoly& p);

// p(x + c).
RatPoly taylor_shift(const RatPoly& p, const Rat& c);
IntPoly taylor_shift(const IntPoly& p, const Int& c);

// Given p of degree d with leading coefficient c, returns c^(d-1) p(x / c): monic, integral,
// with roots c times those of p.
IntPoly monic_root_scaling(const IntPoly& p);

std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");

// Deterministic total order (degree first, then coefficients) used to sort factor lists.
bool poly_less(const IntPoly& a, const IntPoly& b);

}  // namespace irrwalk
