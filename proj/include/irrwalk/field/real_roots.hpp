#pragma once

#include <vector>

#include "irrwalk/algebra/poly.hpp"

namespace irrwalk {

// Closed interval with dyadic rational endpoints. lo == hi denotes an exact point.
struct DyadicInterval {
  Rat lo, hi;

  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool excludes_zero() const { return lo > 0 || hi < 0; }
  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

// Sturm sequence of a squarefree polynomial (f, f', -rem(...), ...), scaled by positive
// constants so that sign patterns are unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);
  // Number of distinct real roots in the half-open interval (a, b].
  std::size_t count(const Rat& a, const Rat& b) const;
  const IntPoly& poly() const { return seq_.front(); }

 private:
  std::size_t variations(const Rat& x) const;
  std::vector<IntPoly> seq_;
};

int sign_at(const IntPoly& f, const Rat& x);

// Power of two strictly exceeding the absolute value of every complex root of f.
Rat root_bound(const IntPoly& f);

// Isolating intervals of the real roots of f (taken squarefree internally), in increasing
// order. Each interval either is an exact rational root or has non-root endpoints and
// contains exactly one root in its interior.
std::vector<DyadicInterval> isolate_real_roots(const IntPoly& f);

// Shrinks an isolating interval of a root of the squarefree f until its width is at most
// 2^-bits. Newton candidates are tried first and bisection is the fallback; the result is
// always nested in the input.
DyadicInterval refine_root(const IntPoly& f, DyadicInterval iv, unsigned long bits);

// Rounds outward to k fractional bits.
DyadicInterval round_outward(const Rat& lo, const Rat& hi, unsigned long k);

}  // namespace irrwalk
