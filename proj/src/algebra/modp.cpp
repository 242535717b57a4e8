#include "modp.hpp"

#include <utility>

namespace irrwalk::modp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly from_int(const IntPoly& f, const Field& F) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.reduce(f.coeffs()[i]);
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  const u64 p = F.p();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 s, const Field& F) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F) {
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  const std::size_t db = b.size() - 1;
  q.assign(a.size() - db, 0);
  const u64 inv = F.inv(b.back());
  const u64 p = F.p();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    u64 f = F.mul(r[i], inv);
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + (p - f) * b[j]) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly rem(const Poly& a, const Poly& b, const Field& F) {
  if (a.size() < b.size()) return a;
  Poly r = a;
  const std::size_t db = b.size() - 1;
  const u64 inv = F.inv(b.back());
  const u64 p = F.p();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    u64 f = F.mul(r[i], inv);
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + (p - f) * b[j]) % p;
  }
  r.resize(db);
  trim(r);
  return r;
}

Poly make_monic(const Poly& a, const Field& F) {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()), F);
}

Poly gcd(Poly a, Poly b, const Field& F) {
  while (!b.empty()) {
    Poly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, F);
}

void ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, const Field& F) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, F);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, F), F);
    Poly t2 = sub(t0, mul(q, t1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = F.inv(r0.back());
  g = scale(r0, inv, F);
  s = scale(s0, inv, F);
  t = scale(t0, inv, F);
}

Poly derivative(const Poly& a, const Field& F) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.p());
  trim(d);
  return d;
}

Poly powmod(const Poly& base, const Int& e, const Poly& m, const Field& F) {
  Poly result{1};
  result = rem(result, m, F);
  Poly b = rem(base, m, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, F), m, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, F), m, F);
  }
  return result;
}

std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& f0, const Field& F) {
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly f = f0;
  const Poly x{0, 1};
  Poly h = rem(x, f, F);
  const Int p(static_cast<unsigned long>(F.p()));
  for (std::size_t d = 1; f.size() > 1 && 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, F);
    Poly g = gcd(sub(h, x, F), f, F);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      Poly q, r;
      divmod(f, g, q, r, F);
      f = std::move(q);
      h = rem(h, f, F);
    }
  }
  if (f.size() > 1) out.emplace_back(make_monic(f, F), deg(f));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, std::size_t d, const Field& F, std::mt19937_64& rng) {
  if (deg(f) == d) return {f};
  Int e = (pow(Int(static_cast<unsigned long>(F.p())), d) - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, F.p() - 1);
  while (true) {
    Poly a(deg(f));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Poly b = sub(powmod(a, e, f, F), Poly{1}, F);
    Poly g = gcd(b, f, F);
    if (g.size() > 1 && g.size() < f.size()) {
      Poly q, r;
      divmod(f, g, q, r, F);
      auto left = equal_degree(g, d, F, rng);
      auto right = equal_degree(make_monic(q, F), d, F, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

}  // namespace irrwalk::modp
