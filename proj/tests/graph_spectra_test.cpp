#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "irrwalk/algebra/factor.hpp"
#include "irrwalk/graph/spectra.hpp"
#include "oracles/brute.hpp"

using namespace irrwalk;
using irrwalk::testing::k4_minus_edge;

namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

AlgebraicNumber Q(const FieldPtr& K, long p, long q = 1) { return AlgebraicNumber::rational(K, Rat(p, q)); }

// <a|E_r|b> from the deleted-polynomial formulas: the value at theta_r of
// (x - theta_r) num(x) / phi(x), with the pole of phi cancelled exactly.
AlgebraicNumber residue_formula(const SpectralDecomposition& sd, std::size_t r, const IntPoly& num) {
  const FieldPtr& K = sd.field();
  const AlgebraicNumber& theta = sd.eigenvalues[r];
  FieldPoly phi = FieldPoly::from_int(K, char_poly(sd.graph));
  FieldPoly top = FieldPoly::from_int(K, num);
  const FieldPoly lin = FieldPoly::linear(theta);
  const int m = sd.multiplicities[r];
  for (int i = 0; i < m; ++i) phi = *exact_div(phi, lin);
  for (int i = 0; i + 1 < m; ++i) {
    auto q = exact_div(top, lin);
    if (!q) return AlgebraicNumber::rational(K, 0);  // numerator vanishes to lower order: never for valid input
    top = *q;
  }
  return top.eval(theta) / phi.eval(theta);
}

}  // namespace

TEST_CASE("char_poly examples") {
  CHECK(char_poly(path_graph(2)) == P({-1, 0, 1}));
  CHECK(char_poly(k4_minus_edge()) == P({0, -4, -5, 0, 1}));
  const IntPoly c5 = P({-2, 1}) * P({-1, 1, 1}) * P({-1, 1, 1});
  CHECK(char_poly(cycle_graph(5)) == c5);
  CHECK(oracle::cofactor_char_poly(irrwalk::testing::to_int_rows(cycle_graph(5))) == c5);
}

TEST_CASE("char_poly agrees with cofactor expansion on the corpus") {
  for (const auto& cg : irrwalk::testing::load_corpus()) {
    if (cg.graph.n() > 7) continue;
    CAPTURE(cg.graph6);
    CHECK(char_poly(cg.graph) == oracle::cofactor_char_poly(irrwalk::testing::to_int_rows(cg.graph)));
  }
}

TEST_CASE("deleted characteristic polynomials") {
  auto d = deleted_char_polys(path_graph(2), 0, 1);
  CHECK(d.without_a == P({0, 1}));
  CHECK(*d.without_ab == P({1}));
  auto c = deleted_char_polys(cycle_graph(5), 2, 2);
  CHECK(c.without_a == P({1, 0, -3, 0, 1}));
  CHECK(c.without_a == oracle::cofactor_char_poly(irrwalk::testing::to_int_rows(path_graph(4))));
  CHECK_FALSE(c.without_ab.has_value());
}

TEST_CASE("phi_ab examples") {
  CHECK(phi_ab_poly(path_graph(2), 0, 1) == P({1}));
  Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(phi_ab_poly(two_edges, 0, 2).is_zero());
  CHECK_THROWS_AS(phi_ab_poly(path_graph(3), 1, 1), InvalidArgument);

  // C5 adjacent pair: the residue formula reproduces 1/5, (-1+sqrt5)/10, (-1-sqrt5)/10 up to sign.
  Graph c5 = cycle_graph(5);
  auto sd = spectral_decomposition(c5);
  IntPoly pab = phi_ab_poly(c5, 0, 1);
  REQUIRE(sd.size() == 3);
  const FieldPtr& K = sd.field();
  AlgebraicNumber s5 = AlgebraicNumber(K, sd.splitting.root_polys[1]) * Rat(2) + Q(K, 1);  // 2*theta_1 + 1 = sqrt 5
  CHECK(s5 * s5 == Q(K, 5));
  std::vector<AlgebraicNumber> expected = {Q(K, 1, 5), (s5 - Q(K, 1)) * Rat(1, 10), (-s5 - Q(K, 1)) * Rat(1, 10)};
  for (std::size_t r = 0; r < 3; ++r) {
    AlgebraicNumber v = residue_formula(sd, r, pab);
    CHECK((v == expected[r] || v == -expected[r]));
    CHECK(sd.entry(r, 0, 1) == expected[r]);
  }
}

TEST_CASE("spectral_decomposition examples") {
  SUBCASE("C5 diagonal") {
    auto sd = spectral_decomposition(cycle_graph(5));
    const FieldPtr& K = sd.field();
    CHECK(sd.multiplicities == std::vector<int>{1, 2, 2});
    CHECK(sd.entry(0, 0, 0) == Q(K, 1, 5));
    CHECK(sd.entry(1, 0, 0) == Q(K, 2, 5));
    CHECK(sd.entry(2, 0, 0) == Q(K, 2, 5));
  }
  SUBCASE("P2") {
    auto sd = spectral_decomposition(path_graph(2));
    const FieldPtr& K = sd.field();
    REQUIRE(sd.size() == 2);
    CHECK(sd.eigenvalues[0] == Q(K, 1));
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        CHECK(sd.entry(0, a, b) == Q(K, 1, 2));
        CHECK(sd.entry(1, a, b) == Q(K, a == b ? 1 : -1, 2));
      }
  }
  SUBCASE("K4 minus an edge: eigenvalue 0 lives on the degree-2 vertices") {
    auto sd = spectral_decomposition(k4_minus_edge());
    std::size_t zero = sd.size();
    for (std::size_t r = 0; r < sd.size(); ++r)
      if (sd.eigenvalues[r].is_zero()) zero = r;
    REQUIRE(zero < sd.size());
    for (std::size_t v : {2u, 3u})
      for (std::size_t c = 0; c < 4; ++c) CHECK(sd.entry(zero, v, c).is_zero());
    CHECK_FALSE(sd.entry(zero, 0, 0).is_zero());
  }
}

TEST_CASE("pair_minpolys examples") {
  auto [p2p, p2m] = pair_minpolys(path_graph(2), 0, 1);
  CHECK(p2p == P({-1, 1}));
  CHECK(p2m == P({1, 1}));
  auto [p3p, p3m] = pair_minpolys(path_graph(3), 0, 2);
  CHECK(p3p == P({-2, 0, 1}));
  CHECK(p3m == P({0, 1}));
  auto [kp, km] = pair_minpolys(k4_minus_edge(), 2, 3);
  CHECK(kp * km == P({1, 1}) * P({-4, -1, 1}));
}

TEST_CASE("strong_cospectrality examples") {
  auto p2 = strong_cospectrality(path_graph(2), 0, 1);
  CHECK(p2.strongly_cospectral);
  CHECK(p2.signs == std::map<std::size_t, int>{{0, 1}, {1, -1}});
  CHECK(p2.phi_zero == P({1}));
  CHECK_FALSE(strong_cospectrality(cycle_graph(5), 0, 1).strongly_cospectral);
  auto k = strong_cospectrality(k4_minus_edge(), 2, 3);
  CHECK(k.strongly_cospectral);
  CHECK(k.phi_zero == P({0, 1}));
  CHECK(k.phi_plus * k.phi_minus * k.phi_zero == char_poly(k4_minus_edge()));
}

TEST_CASE("spectral identities hold exactly on the corpus") {
  std::mt19937_64 rng(41);
  std::size_t cospectral_pairs = 0;
  for (const auto& cg : irrwalk::testing::load_corpus()) {
    CAPTURE(cg.graph6);
    const Graph& G = cg.graph;
    const std::size_t n = G.n();
    auto sd = spectral_decomposition(G);
    const FieldPtr& K = sd.field();
    int total = 0;
    for (int m : sd.multiplicities) total += m;
    CHECK(total == static_cast<int>(n));

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        AlgebraicNumber id = Q(K, 0), eig = Q(K, 0);
        for (std::size_t r = 0; r < sd.size(); ++r) {
          id += sd.entry(r, a, b);
          eig += sd.eigenvalues[r] * sd.entry(r, a, b);
          CHECK(sd.entry(r, a, b) == sd.entry(r, b, a));
        }
        CHECK(id == Q(K, a == b ? 1 : 0));
        CHECK(eig == Q(K, G.adjacent(a, b) ? 1 : 0));
      }

    // Idempotence and orthogonality, sampled.
    std::uniform_int_distribution<std::size_t> rv(0, sd.size() - 1), vv(0, n - 1);
    for (int t = 0; t < 6; ++t) {
      std::size_t r = rv(rng), s = rv(rng), a = vv(rng), b = vv(rng);
      AlgebraicNumber acc = Q(K, 0);
      for (std::size_t c = 0; c < n; ++c) acc += sd.entry(r, a, c) * sd.entry(s, c, b);
      CHECK(acc == (r == s ? sd.entry(r, a, b) : Q(K, 0)));
    }

    // Cross-check against the deleted-polynomial formulas, on a few entries only.
    if (n <= 6) {
      const std::size_t a = vv(rng), b = (a + 1) % n;
      auto del = deleted_char_polys(G, a, b);
      const IntPoly pab = phi_ab_poly(G, a, b);
      for (std::size_t r = 0; r < sd.size(); ++r) {
        CHECK(residue_formula(sd, r, del.without_a) == sd.entry(r, a, a));
        AlgebraicNumber off = residue_formula(sd, r, pab);
        CHECK(off * off == sd.entry(r, a, b) * sd.entry(r, a, b));
      }
    }

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        auto pd = strong_cospectrality(sd, a, b);
        if (!pd.strongly_cospectral) continue;
        ++cospectral_pairs;
        CHECK(squarefree_part(pd.phi_plus) == pd.phi_plus);
        CHECK(squarefree_part(pd.phi_minus) == pd.phi_minus);
        CHECK(gcd(pd.phi_plus, pd.phi_minus).is_constant());
        FieldPoly plus = FieldPoly::constant(Q(K, 1)), minus = FieldPoly::constant(Q(K, 1));
        for (auto [r, s] : pd.signs) (s > 0 ? plus : minus) = (s > 0 ? plus : minus) * FieldPoly::linear(sd.eigenvalues[r]);
        CHECK(plus == FieldPoly::from_int(K, pd.phi_plus));
        CHECK(minus == FieldPoly::from_int(K, pd.phi_minus));
      }
  }
  CHECK(cospectral_pairs > 0);
}
