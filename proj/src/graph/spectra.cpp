#include "irrwalk/graph/spectra.hpp"

#include <tuple>

#include "irrwalk/algebra/factor.hpp"
#include "irrwalk/errors.hpp"

namespace irrwalk {

IntPoly char_poly(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw InvalidArgument("char_poly of a non-square matrix");
  const std::size_t n = M.rows();
  // vect holds det(tI - M_r) for the leading r x r block, highest degree first.
  std::vector<Int> vect{Int(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a, -R C, -R M C, ..., -R M^{r-1} C.
    std::vector<Int> t(r + 2);
    t[0] = 1;
    t[1] = -M(r, r);
    std::vector<Int> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = M(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Int rc = 0;
      for (std::size_t i = 0; i < r; ++i) rc += M(r, i) * v[i];
      t[k + 2] = -rc;
      std::vector<Int> w(r, Int(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) w[i] += M(i, j) * v[j];
      v = std::move(w);
    }
    std::vector<Int> next(r + 2, Int(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * vect[j];
    vect = std::move(next);
  }
  std::vector<Int> asc(vect.rbegin(), vect.rend());
  return IntPoly(std::move(asc));
}

IntPoly char_poly(const Graph& G) { return char_poly(G.adjacency_matrix()); }

IntPoly minimal_poly(const Graph& G) { return squarefree_part(char_poly(G)); }

namespace {

void check_vertex(const Graph& G, std::size_t v) {
  if (v >= G.n()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

void check_pair(const Graph& G, std::size_t a, std::size_t b) {
  check_vertex(G, a);
  check_vertex(G, b);
  if (a == b) throw InvalidArgument("vertex pair must consist of distinct vertices");
}

}  // namespace

DeletedCharPolys deleted_char_polys(const Graph& G, std::size_t a, std::size_t b) {
  check_vertex(G, a);
  check_vertex(G, b);
  DeletedCharPolys d;
  d.without_a = char_poly(G.delete_vertices({a}));
  d.without_b = char_poly(G.delete_vertices({b}));
  if (a != b) d.without_ab = char_poly(G.delete_vertices({a, b}));
  return d;
}

IntPoly phi_ab_poly(const Graph& G, std::size_t a, std::size_t b) {
  check_pair(G, a, b);
  DeletedCharPolys d = deleted_char_polys(G, a, b);
  IntPoly expr = d.without_a * d.without_b - char_poly(G) * *d.without_ab;
  auto root = poly_square_root(to_rat(expr));
  if (!root) throw ConsistencyError("phi_ab: " + to_string(expr) + " is not a perfect square");
  ContentSplit cs = content_split(*root);
  if (cs.content.get_den() != 1) throw ConsistencyError("phi_ab: square root is not integral");
  return cs.primitive * cs.content.get_num();
}

std::vector<std::size_t> SpectralDecomposition::support(std::size_t a) const {
  std::vector<std::size_t> s;
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < graph.n(); ++c)
      if (!projectors[r][c][a].is_zero()) {
        s.push_back(r);
        break;
      }
  return s;
}

SpectralDecomposition spectral_decomposition(const Graph& G, const SplittingOptions& options) {
  SpectralDecomposition sd;
  sd.graph = G;
  const std::size_t n = G.n();
  if (n == 0) throw InvalidArgument("spectral_decomposition: empty graph");
  const IntPoly phi = char_poly(G);
  sd.splitting = splitting_field(squarefree_part(phi), options);
  sd.eigenvalues = sd.splitting.roots();
  const FieldPtr& K = sd.splitting.field;
  const std::size_t d = sd.eigenvalues.size();

  const IntFactorization fac = factor_integer_poly(phi);
  for (const auto& theta : sd.eigenvalues) {
    int m = 0;
    for (const auto& [f, mult] : fac.factors)
      if (FieldPoly::from_int(K, f).eval(theta).is_zero()) m = mult;
    if (m == 0) throw ConsistencyError("spectral_decomposition: eigenvalue without a factor");
    sd.multiplicities.push_back(m);
  }

  // Walk counts (A^j)_{ab} for j < d.
  const IntMatrix A = G.adjacency_matrix();
  std::vector<IntMatrix> powers{IntMatrix::identity(n)};
  for (std::size_t j = 1; j < d; ++j) powers.push_back(powers.back() * A);

  sd.projectors.assign(d, {});
  for (std::size_t r = 0; r < d; ++r) {
    // Lagrange basis polynomial prod_{s != r} (x - theta_s) / (theta_r - theta_s).
    FieldPoly q = FieldPoly::constant(AlgebraicNumber::rational(K, 1));
    AlgebraicNumber denom = AlgebraicNumber::rational(K, 1);
    for (std::size_t s = 0; s < d; ++s) {
      if (s == r) continue;
      q = q * FieldPoly::linear(sd.eigenvalues[s]);
      denom *= sd.eigenvalues[r] - sd.eigenvalues[s];
    }
    q = q * denom.inverse();
    auto& E = sd.projectors[r];
    E.assign(n, std::vector<AlgebraicNumber>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        RatPoly acc;
        for (std::size_t j = 0; j < d; ++j) {
          const Int& w = powers[j](a, b);
          if (w != 0) acc += q.coeff(j).coeffs() * Rat(w);
        }
        E[a][b] = AlgebraicNumber(K, std::move(acc));
        E[b][a] = E[a][b];
      }
  }
  return sd;
}

IntPoly krylov_minpoly(const IntMatrix& A, const std::vector<Int>& v) {
  const std::size_t n = A.rows();
  std::vector<std::vector<Int>> krylov{v};
  // rows of the system: n equations in the coefficients c_0..c_{k-1}
  while (true) {
    const std::size_t k = krylov.size() - 1;
    const std::vector<Int>& target = krylov.back();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(k));
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) M[i][j] = krylov[j][i];
      rhs[i] = target[i];
    }
    bool zero = true;
    for (const auto& x : target) zero = zero && x == 0;
    std::optional<std::vector<Rat>> c;
    if (k == 0) {
      if (zero) c = std::vector<Rat>{};
    } else {
      c = solve_rational(std::move(M), std::move(rhs));
    }
    if (c) {
      std::vector<Rat> coeffs(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
      coeffs[k] = 1;
      return primitive_part(RatPoly(std::move(coeffs)));
    }
    krylov.push_back(A * krylov.back());
  }
}

std::pair<IntPoly, IntPoly> pair_minpolys(const Graph& G, std::size_t a, std::size_t b) {
  check_pair(G, a, b);
  const IntMatrix A = G.adjacency_matrix();
  std::vector<Int> plus(G.n(), Int(0)), minus(G.n(), Int(0));
  plus[a] = 1;
  plus[b] = 1;
  minus[a] = 1;
  minus[b] = -1;
  return {krylov_minpoly(A, plus), krylov_minpoly(A, minus)};
}

PairDecomposition strong_cospectrality(const SpectralDecomposition& sd, std::size_t a, std::size_t b) {
  const Graph& G = sd.graph;
  check_pair(G, a, b);
  PairDecomposition pd;
  pd.a = a;
  pd.b = b;
  std::tie(pd.phi_plus, pd.phi_minus) = pair_minpolys(G, a, b);
  pd.strongly_cospectral = true;
  for (std::size_t r = 0; r < sd.size() && pd.strongly_cospectral; ++r) {
    bool a_zero = true, b_zero = true, same = true, opposite = true;
    for (std::size_t c = 0; c < G.n(); ++c) {
      const AlgebraicNumber &x = sd.entry(r, c, a), &y = sd.entry(r, c, b);
      a_zero = a_zero && x.is_zero();
      b_zero = b_zero && y.is_zero();
      same = same && x == y;
      opposite = opposite && x == -y;
    }
    if (a_zero && b_zero) continue;
    if (a_zero || b_zero || (!same && !opposite)) {
      pd.strongly_cospectral = false;
      pd.signs.clear();
      break;
    }
    pd.signs[r] = same ? 1 : -1;
  }
  if (pd.strongly_cospectral) {
    auto q = exact_div(char_poly(G), pd.phi_plus * pd.phi_minus);
    if (!q) throw ConsistencyError("strong_cospectrality: phi_plus * phi_minus does not divide phi");
    pd.phi_zero = std::move(*q);
  }
  return pd;
}

PairDecomposition strong_cospectrality(const Graph& G, std::size_t a, std::size_t b) {
  return strong_cospectrality(spectral_decomposition(G), a, b);
}

}  // namespace irrwalk
