#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "irrwalk/algebra/poly.hpp"

namespace irrwalk {

// p = content * prod factors[i].first ^ factors[i].second, each factor primitive with
// positive leading coefficient and irreducible over Z.
struct IntFactorization {
  Int content;
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly expand() const;
};

// Complete factorization over Z: squarefree decomposition, then Zassenhaus (modular
// factorization, Hensel lifting, subset recombination) on each squarefree part.
// Factors are listed in increasing degree, ties broken by coefficients.
IntFactorization factor_integer_poly(const IntPoly& p);

// Irreducible factors of a primitive squarefree polynomial. When every irreducible factor
// is known to have degree divisible by `degree_step`, passing it prunes recombination.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, std::size_t degree_step = 1);

bool is_irreducible(const IntPoly& p);

}  // namespace irrwalk
