#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "irrwalk/algebra/poly.hpp"
#include "irrwalk/field/real_roots.hpp"

namespace irrwalk {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[alpha] with alpha a fixed real root of a monic irreducible integer polynomial. The
// isolating interval of alpha is cached and refined in place; refinement is serialized
// so concurrent readers only ever observe nested intervals.
class NumberField {
 public:
  // min_poly must become monic after removing its content and be irreducible over Q.
  // The embedding is the real root inside `isolating`, or the largest real root by default.
  static FieldPtr create(const IntPoly& min_poly);
  static FieldPtr create(const IntPoly& min_poly, const DyadicInterval& isolating);
  // Q itself, presented as Q[x]/(x) with alpha = 0.
  static FieldPtr rationals();

  const IntPoly& min_poly() const { return min_poly_; }
  std::size_t degree() const { return min_poly_.size() - 1; }
  bool is_rationals() const { return degree() == 1; }

  DyadicInterval interval() const;
  // Width at most 2^-bits; successive results are nested.
  DyadicInterval interval(unsigned long bits) const;

  // Same polynomial and same embedded root.
  bool same_as(const NumberField& other) const;

  struct Certified {};
  // Skips the irreducibility check; used where irreducibility is known by construction.
  NumberField(Certified, IntPoly min_poly, DyadicInterval isolating);

 private:
  IntPoly min_poly_;
  mutable std::mutex mu_;
  mutable DyadicInterval iv_;
};

FieldPtr make_certified_field(IntPoly monic_irreducible, DyadicInterval isolating);

class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(FieldPtr field, RatPoly coeffs);
  static AlgebraicNumber rational(FieldPtr field, const Rat& q);
  static AlgebraicNumber generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const RatPoly& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }
  std::optional<Rat> as_rational() const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o);
  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  AlgebraicNumber& operator*=(const Rat& q);
  friend AlgebraicNumber operator*(AlgebraicNumber a, const Rat& q) { return a *= q; }
  friend AlgebraicNumber operator*(const Rat& q, AlgebraicNumber a) { return a *= q; }
  // Same field required.
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(unsigned long e) const;

  // Certified enclosure of the real value of width at most 2^-bits. Calls on the same
  // object (and its copies) return nested intervals.
  DyadicInterval enclosure(unsigned long bits) const;
  double approx() const;

 private:
  void check_same(const AlgebraicNumber& o) const;
  struct Cache {
    std::mutex mu;
    std::optional<DyadicInterval> best;
  };
  FieldPtr field_;
  RatPoly coeffs_;
  mutable std::shared_ptr<Cache> cache_;
};

DyadicInterval refine_embedding(const AlgebraicNumber& x, unsigned long bits);

enum class Sign { negative = -1, zero = 0, positive = 1 };
Sign sign_of(const AlgebraicNumber& x);
// sign_of(a - b) as an int in {-1, 0, 1}.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace irrwalk
