#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "irrwalk/algebra/factor.hpp"
#include "irrwalk/algebra/matrix.hpp"
#include "irrwalk/algebra/poly.hpp"
#include "oracles/brute.hpp"

using namespace irrwalk;

namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

RatPoly R(std::initializer_list<long> c) { return to_rat(P(c)); }

IntPoly random_poly(std::mt19937_64& rng, std::size_t deg, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<Int> c(deg + 1);
  for (auto& x : c) x = d(rng);
  while (c.back() == 0) c.back() = d(rng);
  return IntPoly(std::move(c));
}

// No rational root p/q with p | a0, q | an: irreducible for degree <= 3.
bool has_rational_root(const IntPoly& f) {
  if (f.coeff(0) == 0) return true;
  long a0 = std::labs(f.coeff(0).get_si()), an = std::labs(f.lc().get_si());
  for (long p = 1; p <= a0; ++p) {
    if (a0 % p) continue;
    for (long q = 1; q <= an; ++q) {
      if (an % q) continue;
      for (int s : {1, -1}) {
        Rat r(s * p, q);
        r.canonicalize();
        if (to_rat(f).eval(r) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("degree of the zero polynomial is -infinity") {
  CHECK(IntPoly{}.degree().is_neg_infinity());
  CHECK(IntPoly{}.degree() < P({5}).degree());
  CHECK((IntPoly{}.degree() + P({1, 1}).degree()).is_neg_infinity());
  CHECK(P({0, 0, 3}).degree() == 2u);
  CHECK_THROWS_AS(IntPoly{}.degree().value(), InvalidArgument);
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(R({-1, 0, 1}), R({-1, 1})) == R({-1, 1}));
  CHECK(poly_gcd(R({0, 1}), R({1, 1})) == R({1}));
  RatPoly a = R({0, -4, -5, 0, 1}), b = R({-4, -5, 0, 1});
  RatPoly g = poly_gcd(a, b);
  CHECK(g == b);
  CHECK(exact_div(a, g).has_value());
  CHECK(*exact_div(a, g) == R({0, 1}));
  CHECK(poly_gcd(RatPoly{}, RatPoly{}).is_zero());
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P({-2, 1}), P({-3, 1})) == -1);
  CHECK(resultant(P({-2, 0, 1}), P({-2, 0, 1})) == 0);
  CHECK(oracle::sylvester_resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
  CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
  CHECK_THROWS_AS(resultant(IntPoly{}, P({1, 1})), InvalidArgument);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly a = random_poly(rng, 1 + trial % 4, 6), b = random_poly(rng, 1 + (trial / 4) % 4, 6);
    CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
  }
}

TEST_CASE("factor_integer_poly fixtures") {
  SUBCASE("K4 minus an edge") {
    auto f = factor_integer_poly(P({0, -4, -5, 0, 1}));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair{P({0, 1}), 1});
    CHECK(f.factors[1] == std::pair{P({1, 1}), 1});
    CHECK(f.factors[2] == std::pair{P({-4, -1, 1}), 1});
    CHECK(f.content == 1);
  }
  SUBCASE("degree-4 dependence example") {
    IntPoly quartic = P({4, 6, -5, -2, 1});
    IntPoly p = P({-1, 1}) * P({-1, 1}) * quartic;
    auto f = factor_integer_poly(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair{P({-1, 1}), 2});
    CHECK(f.factors[1] == std::pair{quartic, 1});
    CHECK(f.expand() == p);
  }
  SUBCASE("cycle C9") {
    IntPoly cp = P({-2, 9, 0, -30, 0, 27, 0, -9, 0, 1});
    IntPoly claimed = P({-2, 1}) * P({1, 1}) * P({1, 1}) * P({1, -3, 0, 1}) * P({1, -3, 0, 1});
    REQUIRE(claimed == cp);
    auto f = factor_integer_poly(cp);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair{P({-2, 1}), 1});
    CHECK(f.factors[1] == std::pair{P({1, 1}), 2});
    CHECK(f.factors[2] == std::pair{P({1, -3, 0, 1}), 2});
  }
  SUBCASE("content and sign") {
    auto f = factor_integer_poly(P({6, -6}));
    CHECK(f.content == -6);
    CHECK(f.factors == std::vector<std::pair<IntPoly, int>>{{P({-1, 1}), 1}});
    auto c = factor_integer_poly(P({-7}));
    CHECK(c.content == -7);
    CHECK(c.factors.empty());
  }
  SUBCASE("Swinnerton-Dyer style quartic is irreducible though reducible mod every prime") {
    CHECK(is_irreducible(P({1, 0, -10, 0, 1})));
  }
  CHECK_THROWS_AS(factor_integer_poly(IntPoly{}), InvalidArgument);
}

TEST_CASE("factor_integer_poly recovers random products of irreducibles") {
  std::mt19937_64 rng(11);
  std::vector<IntPoly> fixed = {P({1, 1, 1, 1, 1}), P({1, 0, 0, 1, 0, 0, 1}), P({1, 0, -10, 0, 1}),
                                P({-2, 0, 0, 0, 1}), P({3, -1, 0, 0, 0, 1})};
  for (int trial = 0; trial < 30; ++trial) {
    std::map<std::vector<Int>, int> expected;
    IntPoly prod{Int(1)};
    const int nfac = 1 + trial % 4;
    for (int k = 0; k < nfac; ++k) {
      IntPoly g;
      if (trial % 3 == 0 && k == 0) {
        g = fixed[static_cast<std::size_t>(trial / 3) % fixed.size()];
      } else {
        do g = random_poly(rng, 1 + (trial + k) % 3, 7);
        while (has_rational_root(g) && g.size() > 2);
      }
      g = primitive_part(g);
      int mult = 1 + (k + trial) % 2;
      expected[g.coeffs()] += mult;
      for (int i = 0; i < mult; ++i) prod = prod * g;
    }
    auto f = factor_integer_poly(prod);
    std::map<std::vector<Int>, int> got;
    for (const auto& [g, m] : f.factors) got[g.coeffs()] += m;
    CHECK(got == expected);
    CHECK(f.expand() == prod);
  }
}

TEST_CASE("poly_square_root") {
  CHECK(*poly_square_root(R({1})) == R({1}));
  CHECK(*poly_square_root(R({1, 2, 1})) == R({1, 1}));
  // t*t - (t^2 - 1)*1 for the single-edge graph.
  RatPoly expr = R({0, 1}) * R({0, 1}) - R({-1, 0, 1}) * R({1});
  CHECK(*poly_square_root(expr) == R({1}));
  CHECK_FALSE(poly_square_root(R({0, 1})).has_value());
  CHECK_FALSE(poly_square_root(R({2})).has_value());
  CHECK_FALSE(poly_square_root(R({1, 0, -1})).has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    RatPoly q = to_rat(random_poly(rng, static_cast<std::size_t>(trial % 9), 9)) * Rat(1, 1 + trial % 4);
    auto r = poly_square_root(q * q);
    REQUIRE(r.has_value());
    CHECK((*r == q || *r == -q));
    CHECK(r->lc() > 0);
  }
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly a = random_poly(rng, 1 + trial % 4, 4), b = random_poly(rng, 1 + (trial / 3) % 4, 4);
    if (trial % 2 == 0) {
      IntPoly common = random_poly(rng, 1, 3);
      a = a * common;
      b = b * common;
    }
    bool zero = resultant(a, b) == 0;
    bool shared = !poly_gcd(to_rat(a), to_rat(b)).is_constant();
    CHECK(zero == shared);
  }
}

TEST_CASE("smith_normal_form examples") {
  SUBCASE("identity") {
    auto r = smith_normal_form(IntMatrix::identity(3));
    CHECK(r.U == IntMatrix::identity(3));
    CHECK(r.V == IntMatrix::identity(3));
    CHECK(r.S == IntMatrix::identity(3));
    CHECK(r.rank == 3);
  }
  SUBCASE("single relation") {
    auto M = IntMatrix::from_rows({{Int(1), Int(-1)}});
    auto r = smith_normal_form(M);
    CHECK(r.S == IntMatrix::from_rows({{Int(1), Int(0)}}));
    auto k = r.V.column(1);
    CHECK(abs(k[0]) == 1);
    CHECK(k[0] == k[1]);
  }
  SUBCASE("2x2 chain") {
    auto M = IntMatrix::from_rows({{Int(2), Int(4)}, {Int(6), Int(8)}});
    Int d1 = gcd(gcd(Int(2), Int(4)), gcd(Int(6), Int(8)));
    Int det = abs(oracle::cofactor_determinant({{Int(2), Int(4)}, {Int(6), Int(8)}}));
    auto r = smith_normal_form(M);
    CHECK(r.S(0, 0) == d1);
    CHECK(r.S(1, 1) == det / d1);
    CHECK(r.S(0, 1) == 0);
    CHECK(r.S(1, 0) == 0);
  }
  SUBCASE("zero matrix") {
    auto r = smith_normal_form(IntMatrix(2, 3));
    CHECK(r.rank == 0);
    CHECK(r.V == IntMatrix::identity(3));
  }
}

TEST_CASE("smith_normal_form invariants on random matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) M(i, j) = (trial % 5 == 0 && j == 1) ? M(i, 0) * 2 : Int(val(rng));
    auto s = smith_normal_form(M);
    CHECK(s.U * M * s.V == s.S);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(r));
    CHECK(s.V * s.V_inv == IntMatrix::identity(c));
    CHECK(s.rank == rank(M));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) CHECK(s.S(i, j) == 0);
      }
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      CHECK(s.S(i, i) >= 0);
      if (i < s.rank) CHECK(s.S(i, i) != 0);
      if (i >= s.rank) CHECK(s.S(i, i) == 0);
      if (i + 1 < s.rank) CHECK(mpz_divisible_p(s.S(i + 1, i + 1).get_mpz_t(), s.S(i, i).get_mpz_t()));
    }
    // Determinism.
    CHECK(smith_normal_form(M).V == s.V);
  }
}

TEST_CASE("integer_kernel_basis") {
  auto k = integer_kernel_basis(IntMatrix::from_rows({{Int(1), Int(-1)}}));
  REQUIRE(k.size() == 1);
  CHECK(abs(k[0][0]) == 1);
  CHECK(k[0][0] == k[0][1]);
  CHECK(integer_kernel_basis(IntMatrix::identity(4)).empty());

  // Completeness on a lattice with index: 2x + 4y + 6z = 0 has basis of rank 2, and the
  // solution (1, 1, -1) must be an integer combination of it.
  auto M = IntMatrix::from_rows({{Int(2), Int(4), Int(6)}});
  auto basis = integer_kernel_basis(M);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK((M * v)[0] == 0);
  IntMatrix B(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) B(i, j) = basis[j][i];
  // The basis spans a saturated lattice: its 2x2 minors have gcd 1.
  Int g = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) g = gcd(g, B(a, 0) * B(b, 1) - B(a, 1) * B(b, 0));
  CHECK(g == 1);
}
