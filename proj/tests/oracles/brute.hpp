#pragma once

// Independent brute-force oracles used to freeze expected values in tests.

#include <vector>

#include "irrwalk/algebra/poly.hpp"

namespace irrwalk::oracle {

// Cofactor expansion along the first row; exponential, for small matrices only.
inline Int cofactor_determinant(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Int c = m[0][j] * cofactor_determinant(minor);
    det += (j % 2 == 0) ? c : Int(-c);
  }
  return det;
}

// Resultant as the determinant of the Sylvester matrix.
inline Int sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  std::vector<std::vector<Int>> s(m + n, std::vector<Int>(m + n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a.coeffs()[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b.coeffs()[n - j];
  return cofactor_determinant(s);
}

// det(t I - A) by cofactor expansion over Z[t].
inline IntPoly cofactor_char_poly(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return IntPoly{Int(1)};
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? IntPoly{Int(-a[i][j]), Int(1)} : IntPoly{Int(-a[i][j])};
  struct Rec {
    static IntPoly det(const std::vector<std::vector<IntPoly>>& m) {
      const std::size_t n = m.size();
      if (n == 1) return m[0][0];
      IntPoly d;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<IntPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
          std::vector<IntPoly> row;
          for (std::size_t k = 0; k < n; ++k)
            if (k != j) row.push_back(m[i][k]);
          minor.push_back(row);
        }
        IntPoly c = m[0][j] * det(minor);
        d = (j % 2 == 0) ? d + c : d - c;
      }
      return d;
    }
  };
  return Rec::det(m);
}

}  // namespace irrwalk::oracle
