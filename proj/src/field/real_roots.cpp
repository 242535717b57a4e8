#include "irrwalk/field/real_roots.hpp"

#include <functional>
#include <utility>

namespace irrwalk {

namespace {

IntPoly signed_primitive(const RatPoly& p) {
  ContentSplit cs = content_split(p);
  return sign(cs.content) < 0 ? -cs.primitive : cs.primitive;
}

}  // namespace

int sign_at(const IntPoly& f, const Rat& x) {
  // Horner over the numerator with the denominator cleared: den^d f(num/den).
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  Int acc = 0, dpow = 1;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * num + c[i] * dpow;
    dpow *= den;
  }
  return sign(acc);
}

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  seq_.push_back(squarefree);
  if (squarefree.size() <= 1) return;
  seq_.push_back(squarefree.derivative());
  RatPoly a = to_rat(seq_[0]), b = to_rat(seq_[1]);
  while (b.size() > 1) {
    RatPoly r = -rem(a, b);
    if (r.is_zero()) break;
    seq_.push_back(signed_primitive(r));
    a = std::move(b);
    b = to_rat(seq_.back());
  }
}

std::size_t SturmSequence::variations(const Rat& x) const {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : seq_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t SturmSequence::count(const Rat& a, const Rat& b) const {
  std::size_t va = variations(a), vb = variations(b);
  return va > vb ? va - vb : 0;
}

Rat root_bound(const IntPoly& f) {
  if (f.size() <= 1) return 1;
  Rat m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    Rat q(abs(f.coeff(i)), abs(f.lc()));
    q.canonicalize();
    if (q > m) m = q;
  }
  Rat bound = 1 + m;
  Rat b = 1;
  while (b <= bound) b *= 2;
  return b;
}

DyadicInterval round_outward(const Rat& lo, const Rat& hi, unsigned long k) {
  return {mul_2exp(Rat(floor(mul_2exp(lo, static_cast<long>(k)))), -static_cast<long>(k)),
          mul_2exp(Rat(ceil(mul_2exp(hi, static_cast<long>(k)))), -static_cast<long>(k))};
}

std::vector<DyadicInterval> isolate_real_roots(const IntPoly& f0) {
  std::vector<DyadicInterval> out;
  if (f0.size() <= 1) return out;
  const IntPoly f = squarefree_part(f0);
  const SturmSequence sturm(f);
  const Rat B = root_bound(f);

  std::function<void(const Rat&, const Rat&, std::size_t)> split = [&](const Rat& a, const Rat& b,
                                                                         std::size_t c) {
    if (c == 0) return;
    if (c == 1) {
      if (sign_at(f, b) == 0)
        out.push_back({b, b});
      else
        out.push_back({a, b});
      return;
    }
    const Rat m = (a + b) / 2;
    if (sign_at(f, m) != 0) {
      std::size_t left = sturm.count(a, m);
      split(a, m, left);
      split(m, b, c - left);
      return;
    }
    // m is a root: carve out a small root-free neighbourhood around it.
    Rat delta = (b - a) / 4;
    while (sign_at(f, m - delta) == 0 || sign_at(f, m + delta) == 0 || sturm.count(m - delta, m + delta) != 1)
      delta /= 2;
    const Rat l = m - delta, r = m + delta;
    split(a, l, sturm.count(a, l));
    out.push_back({m, m});
    split(r, b, sturm.count(r, b));
  };
  split(-B, B, sturm.count(-B, B));
  return out;
}

DyadicInterval refine_root(const IntPoly& f, DyadicInterval iv, unsigned long bits) {
  const Rat target = mul_2exp(Rat(1), -static_cast<long>(bits));
  if (iv.lo == iv.hi) return iv;
  if (sign_at(f, iv.hi) == 0) return {iv.hi, iv.hi};
  int slo = sign_at(f, iv.lo);
  if (slo == 0) return {iv.lo, iv.lo};
  const RatPoly fr = to_rat(f), dfr = fr.derivative();

  while (iv.width() > target) {
    const Rat w = iv.width();
    const Rat m = (iv.lo + iv.hi) / 2;
    const int sm = sign_at(f, m);
    if (sm == 0) return {m, m};

    const Rat dm = dfr.eval(m);
    if (dm != 0) {
      const Rat x = m - fr.eval(m) / dm;
      if (iv.lo < x && x < iv.hi) {
        // Grid spacing 2^-k <= w / 256, candidate half-width 4 * 2^-k <= w / 64.
        long k = 8;
        while (mul_2exp(Rat(1), -k) > w / 256) ++k;
        const Rat xd = mul_2exp(Rat(floor(mul_2exp(x, k))), -k);
        const Rat delta = mul_2exp(Rat(1), 2 - k);
        Rat a = xd - delta, b = xd + delta;
        if (a < iv.lo) a = iv.lo;
        if (b > iv.hi) b = iv.hi;
        const int sa = sign_at(f, a), sb = sign_at(f, b);
        if (sa == 0) return {a, a};
        if (sb == 0) return {b, b};
        if (sa != sb) {
          iv = {a, b};
          slo = sa;
          continue;
        }
      }
    }
    if (sm == slo)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

}  // namespace irrwalk
