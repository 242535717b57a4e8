#include "irrwalk/algebra/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "modp.hpp"

namespace irrwalk {

IntPoly IntFactorization::expand() const {
  IntPoly r{content};
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) r = r * f;
  return r;
}

namespace {

using modp::u64;
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zreduce(ZPoly& a, const Int& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zreduce(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zreduce(r, m);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  zreduce(r, m);
  return r;
}

// Division by a monic polynomial modulo m.
void zdivmod_monic(const ZPoly& a, const ZPoly& h, const Int& m, ZPoly& q, ZPoly& r) {
  r = a;
  if (a.size() < h.size()) {
    q.clear();
    return;
  }
  const std::size_t dh = h.size() - 1;
  q.assign(a.size() - dh, Int(0));
  for (std::size_t i = r.size(); i-- > dh;) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] == 0) continue;
    Int f = r[i];
    q[i - dh] = f;
    for (std::size_t j = 0; j <= dh; ++j) mpz_submul(r[i - dh + j].get_mpz_t(), f.get_mpz_t(), h[j].get_mpz_t());
  }
  r.resize(dh);
  zreduce(r, m);
  zreduce(q, m);
}

ZPoly from_modp(const modp::Poly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
  return r;
}

// One quadratic Hensel step: from f = g h, s g + t h = 1 (mod m) to the same modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
  const Int m2 = m * m;
  ZPoly e = zsub(f, zmul(g, h, m2), m2);
  ZPoly q, r;
  zdivmod_monic(zmul(s, e, m2), h, m2, q, r);
  ZPoly g_new = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
  ZPoly h_new = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, g_new, m2), zmul(t, h_new, m2), m2), ZPoly{Int(1)}, m2);
  ZPoly c, d;
  zdivmod_monic(zmul(s, b, m2), h_new, m2, c, d);
  s = zsub(s, d, m2);
  t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g_new, m2), m2), m2);
  g = std::move(g_new);
  h = std::move(h_new);
}

ZPoly zmonic(const ZPoly& a, const Int& m) {
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), m.get_mpz_t()))
    throw ConsistencyError("leading coefficient not invertible during Hensel lifting");
  ZPoly r = a;
  for (auto& c : r) c *= inv;
  zreduce(r, m);
  return r;
}

// Lifts F = lc(F) * prod facs (mod p) to monic factors modulo P = p^(2^j).
void lift_tree(const ZPoly& F, const std::vector<modp::Poly>& facs, std::size_t lo, std::size_t hi,
               const modp::Field& Fp, const Int& P, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zmonic(F, P));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  modp::Poly g0{1}, h0{1};
  for (std::size_t i = lo; i < mid; ++i) g0 = modp::mul(g0, facs[i], Fp);
  for (std::size_t i = mid; i < hi; ++i) h0 = modp::mul(h0, facs[i], Fp);
  g0 = modp::scale(g0, Fp.reduce(F.back()), Fp);
  modp::Poly gg, s0, t0;
  modp::ext_gcd(g0, h0, gg, s0, t0, Fp);
  if (gg.size() != 1) throw ConsistencyError("modular factors not coprime");
  ZPoly g = from_modp(g0), h = from_modp(h0), s = from_modp(s0), t = from_modp(t0);
  Int m(static_cast<unsigned long>(Fp.p()));
  while (m < P) {
    ZPoly Fm = F;
    zreduce(Fm, m * m);
    hensel_step(Fm, g, h, s, t, m);
    m *= m;
  }
  lift_tree(g, facs, lo, mid, Fp, P, out);
  lift_tree(h, facs, mid, hi, Fp, P, out);
}

IntPoly symmetric_int_poly(const ZPoly& a, const Int& P) {
  const Int half = P / 2;
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(c[i].get_mpz_t(), a[i].get_mpz_t(), P.get_mpz_t());
    if (c[i] > half) c[i] -= P;
  }
  return IntPoly(std::move(c));
}

bool is_odd_prime(u64 n) {
  if (n < 3 || n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

struct ModularImage {
  u64 p = 0;
  std::vector<std::pair<modp::Poly, std::size_t>> ddf;
  std::size_t count = 0;
};

// Degrees reachable as sums of sub-multisets of the modular factor degrees.
std::vector<bool> subset_degrees(const ModularImage& img, std::size_t n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (const auto& [g, d] : img.ddf) {
    const std::size_t k = modp::deg(g) / d;
    for (std::size_t rep = 0; rep < k; ++rep)
      for (std::size_t s = n + 1; s-- > d;)
        if (reach[s - d]) reach[s] = true;
  }
  return reach;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f0, std::size_t step) {
  const std::size_t n = f0.size() - 1;
  if (n == 1) return {f0};

  // Sample several good primes, keeping the one with fewest modular factors; the
  // intersection of reachable degree sets restricts recombination.
  std::vector<bool> allowed(n + 1, true);
  ModularImage best;
  std::size_t good = 0;
  const std::size_t wanted = n <= 4 ? 3 : 8;
  for (u64 p = 3; good < wanted; p += 2) {
    if (!is_odd_prime(p)) continue;
    if (mpz_divisible_ui_p(f0.lc().get_mpz_t(), p)) continue;
    modp::Field Fp(p);
    modp::Poly fp = modp::make_monic(modp::from_int(f0, Fp), Fp);
    if (modp::gcd(fp, modp::derivative(fp, Fp), Fp).size() != 1) continue;
    ++good;
    ModularImage img{p, modp::distinct_degree(fp, Fp), 0};
    for (const auto& [g, d] : img.ddf) img.count += modp::deg(g) / d;
    auto reach = subset_degrees(img, n);
    for (std::size_t i = 0; i <= n; ++i) allowed[i] = allowed[i] && reach[i];
    if (best.p == 0 || img.count < best.count) best = std::move(img);
    if (best.count == 1) return {f0};
  }
  bool any_split = false;
  for (std::size_t d = 1; d < n; ++d)
    if (allowed[d] && d % step == 0) any_split = true;
  if (!any_split) return {f0};

  modp::Field Fp(best.p);
  std::mt19937_64 rng(0x5eed5eedULL + best.p);
  std::vector<modp::Poly> facs;
  for (const auto& [g, d] : best.ddf) {
    auto parts = modp::equal_degree(g, d, Fp, rng);
    facs.insert(facs.end(), parts.begin(), parts.end());
  }
  std::sort(facs.begin(), facs.end(), [](const modp::Poly& a, const modp::Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  // Mignotte: any factor's coefficients are bounded by 2^n ||f||_2; scaled by |lc|.
  Int norm2 = 0;
  for (const auto& c : f0.coeffs()) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int lc_abs = abs(f0.lc());
  Int bound = 2 * lc_abs * norm * pow(Int(2), n);
  Int P(static_cast<unsigned long>(best.p));
  while (P <= bound) P *= P;

  ZPoly F(f0.coeffs().begin(), f0.coeffs().end());
  zreduce(F, P);
  std::vector<ZPoly> lifted;
  lift_tree(F, facs, 0, facs.size(), Fp, P, lifted);

  std::vector<IntPoly> result;
  IntPoly f = f0;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::size_t d = 0;
      for (auto i : idx) d += lifted[i].size() - 1;
      if (d % step == 0 && allowed[d]) {
        ZPoly G{f.lc()};
        zreduce(G, P);
        for (auto i : idx) G = zmul(G, lifted[i], P);
        IntPoly cand = symmetric_int_poly(G, P);
        const Int& c0 = cand.coeff(0);
        Int lf0 = f.lc() * f.coeff(0);
        if (c0 != 0 && mpz_divisible_p(lf0.get_mpz_t(), c0.get_mpz_t())) {
          IntPoly g = primitive_part(cand);
          if (auto q = exact_div(f, g)) {
            result.push_back(g);
            f = *q;
            std::vector<ZPoly> rest;
            for (std::size_t i = 0, k = 0; i < r; ++i) {
              if (k < s && idx[k] == i) {
                ++k;
                continue;
              }
              rest.push_back(std::move(lifted[i]));
            }
            lifted = std::move(rest);
            found = true;
            break;
          }
        }
      }
      // Next combination in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) result.push_back(primitive_part(f));
  return result;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f_in, std::size_t degree_step) {
  if (degree_step == 0) degree_step = 1;
  IntPoly f = primitive_part(f_in);
  std::vector<IntPoly> out;
  if (f.size() <= 1) return out;
  if (f.coeff(0) == 0) {
    out.push_back(IntPoly::x());
    f = *exact_div(f, IntPoly::x());
    if (f.coeff(0) == 0) throw InvalidArgument("factor_squarefree: input is not squarefree");
  }
  if (f.size() > 1) {
    auto parts = zassenhaus(f, degree_step);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

IntFactorization factor_integer_poly(const IntPoly& p) {
  if (p.is_zero()) throw InvalidArgument("factor_integer_poly: zero polynomial");
  IntFactorization out;
  out.content = content(p);
  if (p.lc() < 0) out.content = -out.content;
  for (const auto& [part, mult] : squarefree_decomposition(p))
    for (auto& g : factor_squarefree(part)) out.factors.emplace_back(std::move(g), mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.size() <= 1) return false;
  auto fac = factor_integer_poly(p);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace irrwalk
