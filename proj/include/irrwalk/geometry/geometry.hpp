#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "irrwalk/walk/walk.hpp"

namespace irrwalk {

struct PointCloud {
  std::vector<std::complex<double>> points;
  std::string source;                         // producing operation
  std::map<std::string, std::string> params;  // sorted, so output is stable
  std::string graph_hash;
};

// FNV-1a over the upper triangle of the adjacency matrix, as 16 hex digits.
std::string graph_hash(const Graph& g);

// F(z) = sum_r c_r exp(i f^r . z) on the k-torus, c_r real.
class TorusMap {
 public:
  // exact[r] must be real (they always are: projector entries of a symmetric matrix).
  TorusMap(std::vector<AlgebraicNumber> exact, IntMatrix f);
  static TorusMap for_entry(const SpectralDecomposition& sd, std::size_t a, std::size_t b);
  // Uses the given frequency basis, e.g. one chosen to match a preferred coordinate system.
  static TorusMap for_entry(const SpectralDecomposition& sd, const FrequencyBasis& fb, std::size_t a, std::size_t b);

  std::size_t k() const { return f_.cols(); }
  std::size_t terms() const { return c_.size(); }
  const std::vector<AlgebraicNumber>& exact() const { return exact_; }
  const std::vector<double>& coefficients() const { return c_; }
  const IntMatrix& f() const { return f_; }

  std::complex<double> operator()(const std::vector<double>& z) const;
  // dF/dz_l for l < k.
  std::vector<std::complex<double>> gradient(const std::vector<double>& z) const;
  // Im(conj(dF/dz_1) dF/dz_2): zero exactly where the Jacobian of F (as a map to R^2) is singular.
  double jacobian_det(double z1, double z2) const;

 private:
  std::vector<AlgebraicNumber> exact_;
  std::vector<double> c_;
  std::vector<std::vector<long>> f_rows_;
  IntMatrix f_;
};

// U(t)_ab for t = 0, dt, ..., t_max. Eigenvalues and projector entries enter as 64-bit
// certified enclosures; the per-point error is dominated by double rounding of theta t.
PointCloud sample_curve(const SpectralDecomposition& sd, std::size_t a, std::size_t b, double t_max, double dt);

struct GeometryOptions {
  std::uint64_t max_points = 20'000'000;
};

// F on the grid 2 pi (i_1, ..., i_k) / grid, last coordinate fastest.
PointCloud torus_image(const TorusMap& tm, std::size_t grid, const GeometryOptions& options = {});

// F at a grid point, exactly: sum_j C_j zeta^j with zeta = exp(2 pi i / grid), C_j in the field.
struct CyclotomicValue {
  long grid = 1;
  std::map<long, AlgebraicNumber> terms;  // exponents reduced to [0, grid), zero terms dropped
  CyclotomicValue conjugate() const;
  friend bool operator==(const CyclotomicValue& x, const CyclotomicValue& y);
};

CyclotomicValue torus_value_exact(const TorusMap& tm, std::size_t grid, const std::vector<long>& index);

struct Caustics {
  std::vector<std::vector<std::array<double, 2>>> torus_curves;  // coordinates in [0, 2 pi)
  std::vector<PointCloud> images;                                // F along each curve
};

// Critical set of F for k = 2 by sign changes of jacobian_det on a periodic grid
// (offset so nodes avoid rational lines), crossings bisected to 1e-9, chained per cell.
Caustics trace_caustics(const TorusMap& tm, std::size_t resolution);

// (1/p)(kk exp(-i(p - kk)t) + (p - kk) exp(i kk t)) at t = 2 pi j / samples.
PointCloud hypocycloid(int p, int kk, std::size_t samples);
std::complex<double> hypocycloid_point(int p, int kk, double t);

void write_csv(std::ostream& out, const PointCloud& cloud);
// Dots for each cloud, polylines for each curve; fixed viewBox [-1.1, 1.1]^2 with the
// imaginary axis pointing up.
void write_svg(std::ostream& out, const std::vector<PointCloud>& clouds,
               const std::vector<PointCloud>& polylines = {});

}  // namespace irrwalk
