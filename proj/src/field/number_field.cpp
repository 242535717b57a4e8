#include "irrwalk/field/number_field.hpp"

#include <algorithm>

#include "irrwalk/algebra/factor.hpp"
#include "irrwalk/errors.hpp"

namespace irrwalk {

NumberField::NumberField(Certified, IntPoly min_poly, DyadicInterval isolating)
    : min_poly_(std::move(min_poly)), iv_(std::move(isolating)) {}

FieldPtr make_certified_field(IntPoly monic_irreducible, DyadicInterval isolating) {
  return std::make_shared<const NumberField>(NumberField::Certified{}, std::move(monic_irreducible),
                                             std::move(isolating));
}

namespace {

IntPoly checked_min_poly(const IntPoly& p) {
  if (p.size() < 2) throw InvalidArgument("number field: minimal polynomial must be nonconstant");
  IntPoly m = primitive_part(p);
  if (m.lc() != 1) throw InvalidArgument("number field: minimal polynomial is not monic after removing content");
  if (!is_irreducible(m)) throw InvalidArgument("number field: minimal polynomial " + to_string(m) + " is reducible");
  return m;
}

}  // namespace

FieldPtr NumberField::create(const IntPoly& min_poly) {
  IntPoly m = checked_min_poly(min_poly);
  auto roots = isolate_real_roots(m);
  if (roots.empty()) throw InvalidArgument("number field: " + to_string(m) + " has no real root");
  return make_certified_field(std::move(m), roots.back());
}

FieldPtr NumberField::create(const IntPoly& min_poly, const DyadicInterval& isolating) {
  IntPoly m = checked_min_poly(min_poly);
  if (isolating.lo > isolating.hi) throw InvalidArgument("number field: empty isolating interval");
  bool ok;
  if (isolating.lo == isolating.hi) {
    ok = sign_at(m, isolating.lo) == 0;
  } else {
    ok = sign_at(m, isolating.lo) != 0 && SturmSequence(m).count(isolating.lo, isolating.hi) == 1;
  }
  if (!ok) throw InvalidArgument("number field: interval does not isolate exactly one root");
  return make_certified_field(std::move(m), isolating);
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = make_certified_field(IntPoly::x(), DyadicInterval{Rat(0), Rat(0)});
  return q;
}

DyadicInterval NumberField::interval() const {
  std::lock_guard lock(mu_);
  return iv_;
}

DyadicInterval NumberField::interval(unsigned long bits) const {
  std::lock_guard lock(mu_);
  if (iv_.width() > mul_2exp(Rat(1), -static_cast<long>(bits))) iv_ = refine_root(min_poly_, iv_, bits);
  return iv_;
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (min_poly_ != other.min_poly_) return false;
  DyadicInterval a = interval(), b = other.interval();
  // Both isolate a root of the same polynomial: the roots agree iff the intervals meet.
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, RatPoly coeffs) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("AlgebraicNumber: null field");
  coeffs_ = coeffs.size() < field_->min_poly().size() ? std::move(coeffs) : rem_monic(coeffs, field_->min_poly());
  cache_ = std::make_shared<Cache>();
}

AlgebraicNumber AlgebraicNumber::rational(FieldPtr field, const Rat& q) {
  return AlgebraicNumber(std::move(field), RatPoly::constant(q));
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) { return AlgebraicNumber(std::move(field), RatPoly::x()); }

std::optional<Rat> AlgebraicNumber::as_rational() const {
  if (coeffs_.size() > 1) return std::nullopt;
  return coeffs_.coeff(0);
}

void AlgebraicNumber::check_same(const AlgebraicNumber& o) const {
  if (!field_ || !o.field_) throw InvalidArgument("arithmetic on an uninitialized algebraic number");
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw InvalidArgument("arithmetic on elements of different number fields");
}

AlgebraicNumber AlgebraicNumber::operator-() const { return AlgebraicNumber(field_, -coeffs_); }

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  check_same(o);
  coeffs_ += o.coeffs_;
  cache_ = std::make_shared<Cache>();
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  check_same(o);
  coeffs_ -= o.coeffs_;
  cache_ = std::make_shared<Cache>();
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  check_same(o);
  coeffs_ = rem_monic(coeffs_ * o.coeffs_, field_->min_poly());
  cache_ = std::make_shared<Cache>();
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const Rat& q) {
  coeffs_ *= q;
  cache_ = std::make_shared<Cache>();
  return *this;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in a number field");
  if (coeffs_.size() == 1) return rational(field_, 1 / coeffs_.lc());
  ExtGcd e = ext_gcd(coeffs_, to_rat(field_->min_poly()));
  if (e.g.size() != 1) throw ConsistencyError("number field: minimal polynomial has a nontrivial factor");
  return AlgebraicNumber(field_, e.s * (1 / e.g.lc()));
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

AlgebraicNumber AlgebraicNumber::pow(unsigned long e) const {
  AlgebraicNumber result = rational(field_, 1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

namespace {

struct RatInterval {
  Rat lo, hi;
};

RatInterval horner(const RatPoly& p, const DyadicInterval& x) {
  const auto& c = p.coeffs();
  RatInterval acc{c.back(), c.back()};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    Rat a = acc.lo * x.lo, b = acc.lo * x.hi, d = acc.hi * x.lo, e = acc.hi * x.hi;
    acc.lo = std::min({a, b, d, e}) + c[i];
    acc.hi = std::max({a, b, d, e}) + c[i];
  }
  return acc;
}

unsigned long log2_ceil(const Rat& x) {
  unsigned long k = 0;
  Rat p = 1;
  while (p < x) {
    p *= 2;
    ++k;
  }
  return k;
}

}  // namespace

DyadicInterval AlgebraicNumber::enclosure(unsigned long bits) const {
  if (!field_) throw InvalidArgument("enclosure of an uninitialized algebraic number");
  const long k = static_cast<long>(bits) + 2;
  if (coeffs_.size() <= 1) {
    Rat c = coeffs_.coeff(0);
    return round_outward(c, c, static_cast<unsigned long>(k));
  }
  std::lock_guard lock(cache_->mu);
  const Rat target = mul_2exp(Rat(1), -static_cast<long>(bits));
  if (cache_->best && cache_->best->width() <= target) return *cache_->best;

  // Lipschitz bound of p on the current interval widened by 1 sets the working precision.
  DyadicInterval a0 = field_->interval();
  Rat M = std::max(abs(a0.lo), abs(a0.hi)) + 1, L = 0, Mp = 1;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    L += abs(coeffs_.coeffs()[i]) * static_cast<unsigned long>(i) * Mp;
    Mp *= M;
  }
  unsigned long abits = bits + 2 + log2_ceil(L + 1);
  const Rat half = target / 2;
  RatInterval r;
  while (true) {
    r = horner(coeffs_, field_->interval(abits));
    if (r.hi - r.lo <= half) break;
    abits += 16;
  }
  DyadicInterval out = round_outward(r.lo, r.hi, static_cast<unsigned long>(k));
  if (cache_->best) {
    out.lo = std::max(out.lo, cache_->best->lo);
    out.hi = std::min(out.hi, cache_->best->hi);
  }
  cache_->best = out;
  return out;
}

double AlgebraicNumber::approx() const {
  DyadicInterval e = enclosure(60);
  return to_double((e.lo + e.hi) / 2);
}

DyadicInterval refine_embedding(const AlgebraicNumber& x, unsigned long bits) {
  if (bits < 1) throw InvalidArgument("refine_embedding: bits must be at least 1");
  return x.enclosure(bits);
}

Sign sign_of(const AlgebraicNumber& x) {
  if (x.is_zero()) return Sign::zero;
  if (auto q = x.as_rational()) return sign(*q) > 0 ? Sign::positive : Sign::negative;
  for (unsigned long bits = 64;; bits *= 2) {
    DyadicInterval e = x.enclosure(bits);
    if (e.lo > 0) return Sign::positive;
    if (e.hi < 0) return Sign::negative;
  }
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) { return static_cast<int>(sign_of(a - b)); }

}  // namespace irrwalk
