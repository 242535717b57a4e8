#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrwalk/graph/spectra.hpp"

namespace irrwalk {

// Time average of U(t) o U(-t), which equals sum_r E_r o E_r.
struct AverageMixingMatrix {
  std::vector<std::vector<Rat>> entries;
  std::size_t n() const { return entries.size(); }
};

AverageMixingMatrix average_mixing_matrix(const SpectralDecomposition& sd);
AverageMixingMatrix average_mixing_matrix(const Graph& G);

// theta_r = sum_l f(r, l) w_l with w rationally independent, plus a basis of the integer
// relations sum_r c_r theta_r = 0.
struct FrequencyBasis {
  std::vector<std::size_t> support;      // eigenvalue labels, parallel to thetas
  std::vector<AlgebraicNumber> thetas;
  std::vector<AlgebraicNumber> w;
  IntMatrix f;                           // thetas.size() x k
  std::vector<std::vector<Int>> relations;

  std::size_t k() const { return w.size(); }
};

// labels default to 0..thetas.size()-1.
FrequencyBasis frequency_basis(const std::vector<AlgebraicNumber>& thetas, std::vector<std::size_t> labels = {});
FrequencyBasis frequency_basis(const SpectralDecomposition& sd);
// Restricted to the eigenvalue support of the pair: r with <a|E_r|b> != 0.
FrequencyBasis frequency_basis(const SpectralDecomposition& sd, std::size_t a, std::size_t b);

std::vector<std::size_t> pair_support(const SpectralDecomposition& sd, std::size_t a, std::size_t b);

// Largest n admitting an n-fold rotational symmetry of the closure of the entry curve,
// or unbounded when every n works.
struct RotationOrder {
  std::optional<Int> value;
  bool unbounded() const { return !value.has_value(); }
  std::string to_string() const { return value ? value->get_str() : "unbounded"; }
};

RotationOrder rotation_symmetry_order(const FrequencyBasis& fb);

// A torus translation y in [0, 1)^k (units of 2 pi) with f y = (1/n, ..., 1/n) modulo integers,
// which rotates the entry by 2 pi / n; nullopt if none exists.
std::optional<std::vector<Rat>> rotation_shift(const FrequencyBasis& fb, const Int& n);

enum class PgstResult { pgst, not_strongly_cospectral, parity_fails };
std::string to_string(PgstResult r);

struct PgstVerdict {
  std::size_t a = 0, b = 0;
  PgstResult result = PgstResult::not_strongly_cospectral;
  PairDecomposition pair;
  std::vector<AlgebraicNumber> lambdas, mus;        // roots of phi_plus and phi_minus
  std::vector<std::vector<Int>> kernel;             // basis of integer (l, m) solutions
  std::optional<std::vector<Int>> witness;          // (l, m) with sum m odd
};

PgstVerdict decide_pgst(const SpectralDecomposition& sd, std::size_t a, std::size_t b);
PgstVerdict decide_pgst(const Graph& G, std::size_t a, std::size_t b);

// Checks the two linear conditions exactly and that the m-part sums to an odd number.
bool verify_parity_witness(const PgstVerdict& v, const std::vector<Int>& lm);

struct MomentOptions {
  // Largest admissible number of compositions of ell over the support.
  std::uint64_t work_ceiling = 10'000'000;
};

// Time average of |U(t)_ab|^(2 ell), exact.
Rat even_moment(const SpectralDecomposition& sd, std::size_t a, std::size_t b, unsigned ell,
                const MomentOptions& options = {});
// Number of terms the enumeration visits; compare against MomentOptions::work_ceiling.
std::uint64_t moment_work(std::size_t support_size, unsigned ell);

struct SupremumBracket {
  unsigned ell = 0;
  Rat moment;
  Rat lo, hi;  // lo <= moment^(1/(2 ell)) <= hi, dyadic with 64 fractional bits
};

std::vector<SupremumBracket> supremum_estimate(const SpectralDecomposition& sd, std::size_t a, std::size_t b,
                                               unsigned max_ell, const MomentOptions& options = {});

enum class EntryClass { periodic, axis_confined, generic };
std::string to_string(EntryClass c);

struct EntryClassification {
  EntryClass primary = EntryClass::generic;  // priority periodic > axis_confined
  bool periodic = false, axis_confined = false;
};

EntryClassification classify_entry(const SpectralDecomposition& sd, std::size_t a, std::size_t b);

}  // namespace irrwalk
