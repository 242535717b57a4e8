#include "irrwalk/field/field_poly.hpp"

#include "irrwalk/algebra/factor.hpp"
#include "irrwalk/errors.hpp"

namespace irrwalk {

FieldPoly::FieldPoly(FieldPtr K, std::vector<AlgebraicNumber> coeffs) : K_(std::move(K)), c_(std::move(coeffs)) {
  trim();
}

void FieldPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPoly FieldPoly::from_rat(FieldPtr K, const RatPoly& p) {
  std::vector<AlgebraicNumber> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.push_back(AlgebraicNumber::rational(K, q));
  return FieldPoly(std::move(K), std::move(c));
}

FieldPoly FieldPoly::constant(const AlgebraicNumber& c) { return FieldPoly(c.field(), {c}); }

FieldPoly FieldPoly::linear(const AlgebraicNumber& r) {
  return FieldPoly(r.field(), {-r, AlgebraicNumber::rational(r.field(), 1)});
}

const AlgebraicNumber& FieldPoly::lc() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return c_.back();
}

AlgebraicNumber FieldPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : AlgebraicNumber::rational(K_, 0);
}

std::optional<RatPoly> FieldPoly::as_rat() const {
  std::vector<Rat> r;
  for (const auto& c : c_) {
    auto q = c.as_rational();
    if (!q) return std::nullopt;
    r.push_back(*q);
  }
  return RatPoly(std::move(r));
}

AlgebraicNumber FieldPoly::eval(const AlgebraicNumber& x) const {
  AlgebraicNumber acc = AlgebraicNumber::rational(K_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FieldPoly FieldPoly::derivative() const {
  std::vector<AlgebraicNumber> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<unsigned long>(i)));
  return FieldPoly(K_, std::move(d));
}

FieldPoly FieldPoly::monic() const {
  if (c_.empty()) return *this;
  AlgebraicNumber inv = lc().inverse();
  FieldPoly r = *this * inv;
  r.c_.back() = AlgebraicNumber::rational(K_, 1);
  return r;
}

FieldPoly FieldPoly::shift(const AlgebraicNumber& c) const {
  std::vector<AlgebraicNumber> a = c_;
  if (c.is_zero() || a.size() <= 1) return *this;
  const std::size_t d = a.size() - 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = d; j-- > i;) a[j] += c * a[j + 1];
  return FieldPoly(K_, std::move(a));
}

FieldPoly FieldPoly::operator-() const {
  FieldPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& o) {
  while (c_.size() < o.c_.size()) c_.push_back(AlgebraicNumber::rational(K_, 0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& o) {
  while (c_.size() < o.c_.size()) c_.push_back(AlgebraicNumber::rational(K_, 0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return FieldPoly(a.K_);
  // Accumulate unreduced products and reduce each output coefficient once.
  std::vector<RatPoly> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].coeffs() * b.c_[j].coeffs();
  std::vector<AlgebraicNumber> c;
  c.reserve(acc.size());
  for (auto& r : acc) c.emplace_back(a.K_, std::move(r));
  return FieldPoly(a.K_, std::move(c));
}

FieldPoly operator*(const FieldPoly& a, const AlgebraicNumber& s) {
  std::vector<AlgebraicNumber> c;
  for (const auto& x : a.c_) c.push_back(x * s);
  return FieldPoly(a.K_, std::move(c));
}

bool operator==(const FieldPoly& a, const FieldPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const FieldPtr& K = a.field();
  if (a.coeffs().size() < b.coeffs().size()) return {FieldPoly(K), a};
  std::vector<AlgebraicNumber> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<AlgebraicNumber> q(r.size() - db, AlgebraicNumber::rational(K, 0));
  const AlgebraicNumber inv = b.lc().inverse();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    AlgebraicNumber t = r[k] * inv;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= t * bc[j];
    q[k - db] = t;
  }
  r.resize(db);
  return {FieldPoly(K, std::move(q)), FieldPoly(K, std::move(r))};
}

std::optional<FieldPoly> exact_div(const FieldPoly& a, const FieldPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

FieldPoly gcd(const FieldPoly& a0, const FieldPoly& b0) {
  FieldPoly a = a0.monic(), b = b0.monic();
  while (!b.is_zero()) {
    FieldPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rat norm(const AlgebraicNumber& x) {
  if (x.is_zero()) return 0;
  const std::size_t n = x.field()->degree();
  if (auto q = x.as_rational()) return pow(*q, n);
  return resultant(to_rat(x.field()->min_poly()), x.coeffs());
}

RatPoly norm(const FieldPoly& p) {
  if (p.is_zero()) return {};
  const FieldPtr& K = p.field();
  if (auto q = p.as_rat()) {
    RatPoly r{Rat(1)};
    for (std::size_t i = 0; i < K->degree(); ++i) r = r * *q;
    return r;
  }
  // Evaluate at 0..D and interpolate (Newton form).
  const std::size_t D = K->degree() * p.degree().value();
  std::vector<Rat> y(D + 1);
  for (std::size_t i = 0; i <= D; ++i)
    y[i] = norm(p.eval(AlgebraicNumber::rational(K, Rat(static_cast<unsigned long>(i)))));
  for (std::size_t j = 1; j <= D; ++j)
    for (std::size_t i = D; i >= j; --i) y[i] = (y[i] - y[i - 1]) / Rat(static_cast<unsigned long>(j));
  RatPoly r = RatPoly::constant(y[D]);
  for (std::size_t j = D; j-- > 0;)
    r = r * RatPoly{Rat(-static_cast<long>(j)), Rat(1)} + RatPoly::constant(y[j]);
  return r;
}

FieldPoly FieldFactorization::expand() const {
  FieldPoly r = FieldPoly::constant(unit);
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) r = r * f;
  return r;
}

std::vector<TragerFactor> factor_squarefree_over_field(const FieldPoly& p) {
  if (p.is_constant()) throw InvalidArgument("factor_squarefree_over_field: constant polynomial");
  const FieldPtr& K = p.field();
  FieldPoly h = p.monic();
  if (h.degree() == 1u) return {TragerFactor{h, 0, {}}};

  const std::size_t n = K->degree();
  std::vector<TragerFactor> out;
  if (n == 1) {
    auto q = h.as_rat();
    for (const IntPoly& f : factor_squarefree(primitive_part(*q))) {
      RatPoly m = monic(to_rat(f));
      out.push_back({FieldPoly::from_rat(K, m), 0, m});
    }
    return out;
  }

  const AlgebraicNumber alpha = AlgebraicNumber::generator(K);
  for (long s = 0;; s = s > 0 ? -s : 1 - s) {
    FieldPoly shifted = h.shift(alpha * Rat(-s));
    RatPoly N = norm(shifted);
    if (!poly_gcd(N, N.derivative()).is_constant()) continue;
    std::vector<IntPoly> parts = factor_squarefree(primitive_part(N), n);
    if (parts.size() == 1) return {TragerFactor{h, s, monic(N)}};
    for (const IntPoly& Ni : parts) {
      RatPoly m = monic(to_rat(Ni));
      FieldPoly g = gcd(shifted, FieldPoly::from_rat(K, m));
      out.push_back({g.shift(alpha * Rat(s)), s, m});
    }
    return out;
  }
}

FieldFactorization factor_over_field(const FieldPoly& p) {
  if (p.is_zero()) throw InvalidArgument("factor_over_field: zero polynomial");
  FieldFactorization result{p.lc(), {}};
  if (p.is_constant()) return result;
  // Yun's squarefree decomposition over K.
  FieldPoly f = p.monic();
  FieldPoly df = f.derivative();
  FieldPoly a = gcd(f, df);
  FieldPoly b = *exact_div(f, a);
  FieldPoly c = *exact_div(df, a);
  FieldPoly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    FieldPoly ai = gcd(b, d);
    b = *exact_div(b, ai);
    c = *exact_div(d, ai);
    d = c - b.derivative();
    if (!ai.is_constant())
      for (auto& t : factor_squarefree_over_field(ai)) result.factors.emplace_back(std::move(t.factor), i);
  }
  return result;
}

}  // namespace irrwalk
