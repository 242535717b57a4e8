#include "irrwalk/algebra/matrix.hpp"

#include <sstream>
#include <utility>

#include "irrwalk/errors.hpp"

namespace irrwalk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols_ != v.size()) throw InvalidArgument("IntMatrix-vector product: dimension mismatch");
  std::vector<Int> r(a.rows_, Int(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) mpz_addmul(r[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Bareiss elimination in place; returns the rank and records the sign of row swaps.
std::size_t bareiss(IntMatrix& a, int& swap_sign) {
  const std::size_t n = a.rows(), m = a.cols();
  swap_sign = 1;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(piv, j), a(r, j));
      swap_sign = -swap_sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        Int t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int s = 1;
  std::size_t r = bareiss(a, s);
  if (r < m.rows()) return 0;
  Int d = a(m.rows() - 1, m.cols() - 1);
  return s < 0 ? Int(-d) : d;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  int s = 1;
  return bareiss(a, s);
}

namespace {

class SnfWork {
 public:
  explicit SnfWork(const IntMatrix& m)
      : S(m),
        U(IntMatrix::identity(m.rows())),
        Ui(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        Vi(IntMatrix::identity(m.cols())) {}

  // row_i += q * row_j
  void row_add(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < S.cols(); ++c) mpz_addmul(S(i, c).get_mpz_t(), q.get_mpz_t(), S(j, c).get_mpz_t());
    for (std::size_t c = 0; c < U.cols(); ++c) mpz_addmul(U(i, c).get_mpz_t(), q.get_mpz_t(), U(j, c).get_mpz_t());
    for (std::size_t r = 0; r < Ui.rows(); ++r) mpz_submul(Ui(r, j).get_mpz_t(), q.get_mpz_t(), Ui(r, i).get_mpz_t());
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S(i, c), S(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < Ui.rows(); ++r) std::swap(Ui(r, i), Ui(r, j));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < S.cols(); ++c) S(i, c) = -S(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < Ui.rows(); ++r) Ui(r, i) = -Ui(r, i);
  }
  // col_j += q * col_i
  void col_add(std::size_t j, std::size_t i, const Int& q) {
    for (std::size_t r = 0; r < S.rows(); ++r) mpz_addmul(S(r, j).get_mpz_t(), q.get_mpz_t(), S(r, i).get_mpz_t());
    for (std::size_t r = 0; r < V.rows(); ++r) mpz_addmul(V(r, j).get_mpz_t(), q.get_mpz_t(), V(r, i).get_mpz_t());
    for (std::size_t c = 0; c < Vi.cols(); ++c) mpz_submul(Vi(i, c).get_mpz_t(), q.get_mpz_t(), Vi(j, c).get_mpz_t());
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S(r, i), S(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < Vi.cols(); ++c) std::swap(Vi(i, c), Vi(j, c));
  }

  IntMatrix S, U, Ui, V, Vi;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfWork w(m);
  IntMatrix& S = w.S;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    bool have_pivot = true;
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (S(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(S(i, j).get_mpz_t(), S(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        have_pivot = false;
        break;
      }
      w.row_swap(t, pi);
      w.col_swap(t, pj);

      bool clean = true;
      Int q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        if (q != 0) w.row_add(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        if (q != 0) w.col_add(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.row_add(t, bad, Int(1));
    }
    if (!have_pivot) break;
    if (S(t, t) < 0) w.row_negate(t);
  }
  SnfResult r;
  r.rank = t;
  r.S = std::move(w.S);
  r.U = std::move(w.U);
  r.V = std::move(w.V);
  r.U_inv = std::move(w.Ui);
  r.V_inv = std::move(w.Vi);
  return r;
}

std::vector<std::vector<Rat>> rational_kernel(std::vector<std::vector<Rat>> A, std::size_t n) {
  const std::size_t m = A.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[piv], A[row]);
    const Rat inv = 1 / A[row][col];
    for (std::size_t j = col; j < n; ++j) A[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || A[i][col] == 0) continue;
      const Rat f = A[i][col];
      for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < row; ++i) v[pivot_col[i]] = -A[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

SaturatedLattice saturate(const std::vector<std::vector<Rat>>& generators, std::size_t n) {
  SaturatedLattice out;
  IntMatrix B(n, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != n) throw InvalidArgument("saturate: generator has wrong length");
    Int den = 1;
    for (const auto& x : generators[j]) den = lcm(den, x.get_den());
    for (std::size_t i = 0; i < n; ++i) B(i, j) = Rat(generators[j][i] * den).get_num();
  }
  SnfResult snf = generators.empty() ? SnfResult{IntMatrix::identity(n), B, IntMatrix(), IntMatrix::identity(n),
                                                 IntMatrix(), 0}
                                     : smith_normal_form(B);
  out.rank = snf.rank;
  out.W = snf.U_inv;
  out.W_inv = snf.U;
  return out;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m) {
  std::vector<std::vector<Rat>> A(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) A[i][j] = m(i, j);
  SaturatedLattice L = saturate(rational_kernel(std::move(A), m.cols()), m.cols());
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = 0; j < L.rank; ++j) basis.push_back(L.W.column(j));
  return basis;
}

std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  if (b.size() != m) throw InvalidArgument("solve_rational: dimension mismatch");
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[piv], A[row]);
    std::swap(b[piv], b[row]);
    const Rat inv = 1 / A[row][col];
    for (std::size_t j = col; j < n; ++j) A[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || A[i][col] == 0) continue;
      const Rat f = A[i][col];
      for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace irrwalk
