#pragma once

// Dense polynomial arithmetic over Z/pZ for word-sized odd primes p < 2^31.
// Internal to the integer factorization.

#include <cstdint>
#include <random>
#include <vector>

#include "irrwalk/algebra/poly.hpp"

namespace irrwalk::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

class Field {
 public:
  explicit Field(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 reduce(const Int& x) const { return mpz_fdiv_ui(x.get_mpz_t(), p_); }

 private:
  u64 p_;
};

void trim(Poly& a);
inline bool is_zero(const Poly& a) { return a.empty(); }
inline std::size_t deg(const Poly& a) { return a.size() - 1; }

Poly from_int(const IntPoly& f, const Field& F);
Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly scale(const Poly& a, u64 s, const Field& F);
// Quotient and remainder; b nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F);
Poly rem(const Poly& a, const Poly& b, const Field& F);
Poly make_monic(const Poly& a, const Field& F);
Poly gcd(Poly a, Poly b, const Field& F);
// (g, s, t) with s a + t b = g monic.
void ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, const Field& F);
Poly derivative(const Poly& a, const Field& F);
// base^e mod m, e given as a big integer.
Poly powmod(const Poly& base, const Int& e, const Poly& m, const Field& F);

// Distinct-degree factorization of a monic squarefree polynomial: pairs (product, degree).
std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& f, const Field& F);
// Splits a monic product of irreducibles of degree d into its monic factors.
std::vector<Poly> equal_degree(const Poly& f, std::size_t d, const Field& F, std::mt19937_64& rng);

}  // namespace irrwalk::modp
