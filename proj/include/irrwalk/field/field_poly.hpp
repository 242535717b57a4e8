#pragma once

#include <utility>
#include <vector>

#include "irrwalk/field/number_field.hpp"

namespace irrwalk {

// Univariate polynomial over a number field K, dense ascending and trimmed.
class FieldPoly {
 public:
  explicit FieldPoly(FieldPtr K) : K_(std::move(K)) {}
  FieldPoly(FieldPtr K, std::vector<AlgebraicNumber> coeffs);
  static FieldPoly from_rat(FieldPtr K, const RatPoly& p);
  static FieldPoly from_int(FieldPtr K, const IntPoly& p) { return from_rat(std::move(K), to_rat(p)); }
  static FieldPoly constant(const AlgebraicNumber& c);
  // x - r
  static FieldPoly linear(const AlgebraicNumber& r);

  const FieldPtr& field() const { return K_; }
  const std::vector<AlgebraicNumber>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const { return c_.empty() ? Degree{} : Degree(c_.size() - 1); }
  const AlgebraicNumber& lc() const;
  AlgebraicNumber coeff(std::size_t i) const;

  // Coefficients all rational: the polynomial as an element of Q[x].
  std::optional<RatPoly> as_rat() const;

  AlgebraicNumber eval(const AlgebraicNumber& x) const;
  FieldPoly derivative() const;
  FieldPoly monic() const;
  // p(x + c)
  FieldPoly shift(const AlgebraicNumber& c) const;

  FieldPoly operator-() const;
  FieldPoly& operator+=(const FieldPoly& o);
  FieldPoly& operator-=(const FieldPoly& o);
  friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
  friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const AlgebraicNumber& s);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b);

 private:
  void trim();
  FieldPtr K_;
  std::vector<AlgebraicNumber> c_;
};

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
std::optional<FieldPoly> exact_div(const FieldPoly& a, const FieldPoly& b);
// Monic gcd; gcd(0, 0) = 0.
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);

// Norm_{K/Q}(p) = prod over embeddings sigma of p^sigma, a polynomial over Q.
RatPoly norm(const FieldPoly& p);
Rat norm(const AlgebraicNumber& x);

struct FieldFactorization {
  AlgebraicNumber unit;
  std::vector<std::pair<FieldPoly, int>> factors;  // monic irreducible over K

  FieldPoly expand() const;
};

// Complete factorization over K by Trager's norm method, after a squarefree decomposition.
FieldFactorization factor_over_field(const FieldPoly& p);

// One irreducible factor g of a monic squarefree p over K, with the shift s used and the
// minimal polynomial over Q of (a root of g) + s*alpha, namely Norm(g(x - s alpha)).
struct TragerFactor {
  FieldPoly factor;
  long shift = 0;
  RatPoly shifted_norm;
};

std::vector<TragerFactor> factor_squarefree_over_field(const FieldPoly& p);

}  // namespace irrwalk
