#include "irrwalk/algebra/poly.hpp"

#include <sstream>

namespace irrwalk {

template <>
IntPoly IntPoly::multiply(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(c));
}

namespace {

// p = num / den with den > 0 the lcm of the coefficient denominators.
std::pair<IntPoly, Int> clear_denominators(const RatPoly& p) {
  Int den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> num(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rat& c = p.coeffs()[i];
    Int scale = den / c.get_den();
    num[i] = c.get_num() * scale;
  }
  return {IntPoly(std::move(num)), den};
}

RatPoly divide_by(const IntPoly& num, const Int& den) {
  std::vector<Rat> c(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    c[i] = Rat(num.coeffs()[i], den);
    c[i].canonicalize();
  }
  return RatPoly(std::move(c));
}

IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Int> r = a.coeffs();
  const Int& lb = b.lc();
  while (r.size() > db && !r.empty()) {
    const std::size_t k = r.size() - 1 - db;
    Int lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= lr * b.coeffs()[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

template <>
RatPoly RatPoly::multiply(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [na, da] = clear_denominators(a);
  auto [nb, db] = clear_denominators(b);
  Int den = da * db;
  return divide_by(na * nb, den);
}

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> c(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(c));
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Int g = content(p);
  if (p.lc() < 0) g = -g;
  std::vector<Int> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(c[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

ContentSplit content_split(const RatPoly& p) {
  if (p.is_zero()) return {Rat(0), IntPoly{}};
  auto [num, den] = clear_denominators(p);
  IntPoly prim = primitive_part(num);
  Int g = content(num);
  if (num.lc() < 0) g = -g;
  Rat c(g, den);
  c.canonicalize();
  return {c, prim};
}

IntPoly primitive_part(const RatPoly& p) { return content_split(p).primitive; }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.size() < b.size()) return {RatPoly{}, a};
  std::vector<Rat> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<Rat> q(a.size() - db, Rat(0));
  Rat inv_lc = 1 / b.lc();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Rat f = r[i] * inv_lc;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly rem_monic(const RatPoly& a, const IntPoly& m) {
  if (a.size() < m.size()) return a;
  auto [num, den] = clear_denominators(a);
  std::vector<Int> r = num.coeffs();
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = r.size(); i-- > dm;) {
    if (r[i] == 0) continue;
    Int f = r[i];
    for (std::size_t j = 0; j <= dm; ++j) mpz_submul(r[i - dm + j].get_mpz_t(), f.get_mpz_t(), m.coeffs()[j].get_mpz_t());
  }
  r.resize(dm);
  return divide_by(IntPoly(std::move(r)), den);
}

std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  if (a.size() < b.size()) return std::nullopt;
  std::vector<Int> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<Int> q(a.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    Int f;
    mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), b.lc().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), f.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    q[i - db] = std::move(f);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

std::optional<RatPoly> exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.lc());
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.size() == 1) return IntPoly{Int(1)};
    IntPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return monic(to_rat(gcd(primitive_part(a), primitive_part(b))));
}

ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Rat resultant(const RatPoly& a0, const RatPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw InvalidArgument("resultant of the zero polynomial");
  RatPoly a = a0, b = b0;
  Rat acc = 1;
  while (true) {
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    if (db == 0) return acc * pow(b.lc(), da);
    if (da == 0) return acc * pow(a.lc(), db);
    RatPoly r = rem(a, b);
    if (r.is_zero()) return 0;
    const std::size_t dr = r.size() - 1;
    if ((da * db) % 2 == 1) acc = -acc;
    acc *= pow(b.lc(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

Int resultant(const IntPoly& a, const IntPoly& b) {
  Rat r = resultant(to_rat(a), to_rat(b));
  if (r.get_den() != 1) throw ConsistencyError("integer resultant with a denominator");
  return r.get_num();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = primitive_part(p);
  if (f.size() <= 1) return out;
  IntPoly df = f.derivative();
  IntPoly a = gcd(f, df);
  IntPoly b = *exact_div(f, a);
  IntPoly c = *exact_div(df, a);
  IntPoly d = c - b.derivative();
  int i = 1;
  while (b.size() > 1) {
    IntPoly ai = gcd(b, d);
    b = *exact_div(b, ai);
    c = *exact_div(d, ai);
    d = c - b.derivative();
    if (ai.size() > 1) out.emplace_back(primitive_part(ai), i);
    ++i;
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly r{Int(1)};
  for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
  return r;
}

namespace {

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rat(n, d);
}

}  // namespace

std::optional<RatPoly> poly_square_root(const RatPoly& p) {
  if (p.is_zero()) return RatPoly{};
  const std::size_t deg = p.size() - 1;
  if (deg % 2 == 1) return std::nullopt;
  auto top = rational_sqrt(p.lc());
  if (!top) return std::nullopt;
  const std::size_t d = deg / 2;
  std::vector<Rat> q(d + 1, Rat(0));
  q[d] = *top;
  Rat inv_2top = 1 / (2 * *top);
  for (std::size_t k = 1; k <= d; ++k) {
    Rat acc = p.coeffs()[deg - k];
    for (std::size_t i = 1; i < k; ++i) acc -= q[d - i] * q[d - k + i];
    q[d - k] = acc * inv_2top;
  }
  RatPoly root(std::move(q));
  if (!(root * root == p)) return std::nullopt;
  return root;
}

RatPoly taylor_shift(const RatPoly& p, const Rat& c) {
  std::vector<Rat> r = p.coeffs();
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) r[j] += c * r[j + 1];
  return RatPoly(std::move(r));
}

IntPoly taylor_shift(const IntPoly& p, const Int& c) {
  std::vector<Int> r = p.coeffs();
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) mpz_addmul(r[j].get_mpz_t(), c.get_mpz_t(), r[j + 1].get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly monic_root_scaling(const IntPoly& p) {
  if (p.size() <= 1) throw InvalidArgument("monic_root_scaling needs a nonconstant polynomial");
  const std::size_t d = p.size() - 1;
  const Int& c = p.lc();
  std::vector<Int> q(d + 1);
  q[d] = 1;
  for (std::size_t i = 0; i < d; ++i) q[i] = p.coeffs()[i] * pow(c, d - 1 - i);
  return IntPoly(std::move(q));
}

namespace {

template <class T>
std::string poly_string(const Poly<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    T c = p.coeffs()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (c != 1 || i == 0) {
      os << to_string(c);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return poly_string(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return poly_string(p, var); }

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

}  // namespace irrwalk
