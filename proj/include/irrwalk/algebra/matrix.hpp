#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "irrwalk/algebra/numbers.hpp"

namespace irrwalk {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);

// Rank over Q via fraction-free elimination.
std::size_t rank(const IntMatrix& m);

// U * M * V = S with U, V unimodular; S diagonal, nonnegative, d_1 | d_2 | ... | d_rank,
// followed by zeros. The inverses of U and V are tracked alongside.
struct SnfResult {
  IntMatrix U, S, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;
};

// Pivot rule: the nonzero entry of least absolute value in the active block, ties broken
// by lowest (row, col). Output is deterministic for a given input.
SnfResult smith_normal_form(const IntMatrix& m);

// Basis of the lattice {x in Z^n : M x = 0}, obtained by saturating the rational kernel
// (so entries stay small even when M has huge entries).
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m);

// Basis of {x in Q^n : A x = 0} (A given by rows of length n), one vector per free column.
std::vector<std::vector<Rat>> rational_kernel(std::vector<std::vector<Rat>> A, std::size_t n);

// For generators of a subspace V of Q^n: W unimodular whose first `rank` columns are a
// basis of V intersected with Z^n. W_inv is its inverse.
struct SaturatedLattice {
  IntMatrix W, W_inv;
  std::size_t rank = 0;
};
SaturatedLattice saturate(const std::vector<std::vector<Rat>>& generators, std::size_t n);

// A solution of A x = b over Q (A given by rows, possibly non-square), or nullopt if the
// system is inconsistent. Free variables are set to zero.
std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

}  // namespace irrwalk
