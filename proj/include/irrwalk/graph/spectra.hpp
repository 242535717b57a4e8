#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "irrwalk/field/splitting.hpp"
#include "irrwalk/graph/graph.hpp"

namespace irrwalk {

// det(tI - M) by Berkowitz's division-free algorithm.
IntPoly char_poly(const IntMatrix& M);
IntPoly char_poly(const Graph& G);

// Minimal polynomial of A(G): the squarefree part of its characteristic polynomial.
IntPoly minimal_poly(const Graph& G);

struct DeletedCharPolys {
  IntPoly without_a, without_b;
  std::optional<IntPoly> without_ab;  // only for a != b
};
DeletedCharPolys deleted_char_polys(const Graph& G, std::size_t a, std::size_t b);

// The polynomial square root of phi_{G\a} phi_{G\b} - phi_G phi_{G\ab}, with positive
// leading coefficient (or zero).
IntPoly phi_ab_poly(const Graph& G, std::size_t a, std::size_t b);

struct SpectralDecomposition {
  Graph graph;
  SplittingData splitting;  // of the minimal polynomial; theta_0 > theta_1 > ...
  std::vector<AlgebraicNumber> eigenvalues;
  std::vector<int> multiplicities;
  // projectors[r][a][b] = <a|E_r|b>
  std::vector<std::vector<std::vector<AlgebraicNumber>>> projectors;

  std::size_t size() const { return eigenvalues.size(); }
  const AlgebraicNumber& entry(std::size_t r, std::size_t a, std::size_t b) const { return projectors[r][a][b]; }
  const FieldPtr& field() const { return splitting.field; }
  // Eigenvalue indices r with E_r|a> != 0 (the eigenvalue support of a).
  std::vector<std::size_t> support(std::size_t a) const;
};

SpectralDecomposition spectral_decomposition(const Graph& G, const SplittingOptions& options = {});

// Minimal polynomials of A on the Krylov spaces of |a> + |b> and |a> - |b>, primitive
// with positive leading coefficient.
std::pair<IntPoly, IntPoly> pair_minpolys(const Graph& G, std::size_t a, std::size_t b);
// Minimal polynomial of A on the Krylov space of v.
IntPoly krylov_minpoly(const IntMatrix& A, const std::vector<Int>& v);

struct PairDecomposition {
  std::size_t a = 0, b = 0;
  IntPoly phi_plus, phi_minus;
  IntPoly phi_zero;  // char_poly / (phi_plus phi_minus); zero when not strongly cospectral
  bool strongly_cospectral = false;
  std::map<std::size_t, int> signs;  // sigma_r for r in the support of a
};

PairDecomposition strong_cospectrality(const SpectralDecomposition& sd, std::size_t a, std::size_t b);
PairDecomposition strong_cospectrality(const Graph& G, std::size_t a, std::size_t b);

}  // namespace irrwalk
