#include "irrwalk/walk/walk.hpp"

#include <functional>
#include <limits>
#include <map>

#include "irrwalk/errors.hpp"

namespace irrwalk {

namespace {

Rat rational_or_throw(const AlgebraicNumber& x, const char* what) {
  auto q = x.as_rational();
  if (!q) throw ConsistencyError(std::string(what) + " has a nonzero irrational part");
  return *q;
}

void check_vertex(const SpectralDecomposition& sd, std::size_t v) {
  if (v >= sd.graph.n()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

Int lcm_of_denominators(const std::vector<Rat>& xs) {
  Int m = 1;
  for (const auto& x : xs) m = lcm(m, x.get_den());
  return m;
}

}  // namespace

AverageMixingMatrix average_mixing_matrix(const SpectralDecomposition& sd) {
  const std::size_t n = sd.graph.n();
  AverageMixingMatrix M;
  M.entries.assign(n, std::vector<Rat>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      AlgebraicNumber acc = AlgebraicNumber::rational(sd.field(), 0);
      for (std::size_t r = 0; r < sd.size(); ++r) acc += sd.entry(r, a, b) * sd.entry(r, a, b);
      M.entries[a][b] = M.entries[b][a] = rational_or_throw(acc, "average mixing matrix entry");
    }
  return M;
}

AverageMixingMatrix average_mixing_matrix(const Graph& G) { return average_mixing_matrix(spectral_decomposition(G)); }

FrequencyBasis frequency_basis(const std::vector<AlgebraicNumber>& thetas, std::vector<std::size_t> labels) {
  FrequencyBasis fb;
  const std::size_t N = thetas.size();
  if (labels.empty())
    for (std::size_t r = 0; r < N; ++r) labels.push_back(r);
  if (labels.size() != N) throw InvalidArgument("frequency_basis: label count mismatch");
  fb.support = std::move(labels);
  fb.thetas = thetas;
  if (N == 0) return fb;
  const FieldPtr K = thetas[0].field();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (thetas[i] == thetas[j]) throw InvalidArgument("frequency_basis: repeated eigenvalue");

  // Relations are the integer points of the rational kernel of P, whose columns are the
  // coordinate vectors of the thetas over 1, alpha, alpha^2, ... Completing a basis of the
  // saturated kernel to a unimodular W gives w_l = theta . W[:, q + l] and f = rows of
  // W^-1 below the first q, so theta_r = sum_l f(r, l) w_l.
  const std::size_t D = K->degree();
  std::vector<std::vector<Rat>> P(D, std::vector<Rat>(N));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t i = 0; i < D; ++i) P[i][r] = thetas[r].coeffs().coeff(i);
  const SaturatedLattice L = saturate(rational_kernel(std::move(P), N), N);
  const std::size_t q = L.rank, k = N - q;
  for (std::size_t j = 0; j < q; ++j) fb.relations.push_back(L.W.column(j));
  for (std::size_t l = 0; l < k; ++l) {
    AlgebraicNumber w = AlgebraicNumber::rational(K, 0);
    for (std::size_t r = 0; r < N; ++r)
      if (L.W(r, q + l) != 0) w += thetas[r] * Rat(L.W(r, q + l));
    fb.w.push_back(std::move(w));
  }
  fb.f = IntMatrix(N, k);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t l = 0; l < k; ++l) fb.f(r, l) = L.W_inv(q + l, r);

  for (std::size_t r = 0; r < N; ++r) {
    AlgebraicNumber acc = AlgebraicNumber::rational(K, 0);
    for (std::size_t l = 0; l < k; ++l) acc += fb.w[l] * Rat(fb.f(r, l));
    if (!(acc == thetas[r])) throw ConsistencyError("frequency_basis: reconstruction failed");
  }
  for (const auto& c : fb.relations) {
    AlgebraicNumber acc = AlgebraicNumber::rational(K, 0);
    for (std::size_t r = 0; r < N; ++r) acc += thetas[r] * Rat(c[r]);
    if (!acc.is_zero()) throw ConsistencyError("frequency_basis: relation does not annihilate");
  }
  if (rank(fb.f) != k) throw ConsistencyError("frequency_basis: f does not have full rank");
  return fb;
}

FrequencyBasis frequency_basis(const SpectralDecomposition& sd) { return frequency_basis(sd.eigenvalues); }

std::vector<std::size_t> pair_support(const SpectralDecomposition& sd, std::size_t a, std::size_t b) {
  check_vertex(sd, a);
  check_vertex(sd, b);
  std::vector<std::size_t> s;
  for (std::size_t r = 0; r < sd.size(); ++r)
    if (!sd.entry(r, a, b).is_zero()) s.push_back(r);
  return s;
}

FrequencyBasis frequency_basis(const SpectralDecomposition& sd, std::size_t a, std::size_t b) {
  std::vector<std::size_t> s = pair_support(sd, a, b);
  std::vector<AlgebraicNumber> thetas;
  for (std::size_t r : s) thetas.push_back(sd.eigenvalues[r]);
  return frequency_basis(thetas, s);
}

RotationOrder rotation_symmetry_order(const FrequencyBasis& fb) {
  Int g = 0;
  for (const auto& c : fb.relations) {
    Int s = 0;
    for (const auto& x : c) s += x;
    g = gcd(g, s);
  }
  if (g == 0) return {};
  return {g};
}

std::optional<std::vector<Rat>> rotation_shift(const FrequencyBasis& fb, const Int& n) {
  if (n <= 0) throw InvalidArgument("rotation_shift: n must be positive");
  const std::size_t N = fb.thetas.size(), k = fb.k();
  // U f V = S; with y = V z the condition reads S z = U (1/n + v) for an integer v.
  const SnfResult snf = smith_normal_form(fb.f);
  std::vector<Int> ones(N, Int(1));
  std::vector<Int> b = snf.U * ones;
  for (std::size_t i = k; i < N; ++i)
    if (!mpz_divisible_p(b[i].get_mpz_t(), n.get_mpz_t())) return std::nullopt;
  std::vector<Rat> z(k);
  for (std::size_t l = 0; l < k; ++l) z[l] = Rat(b[l]) / (Rat(n) * Rat(snf.S(l, l)));
  std::vector<Rat> y(k, Rat(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) y[i] += Rat(snf.V(i, l)) * z[l];
  for (auto& c : y) c -= floor(c);  // f is integral, so only y mod 1 matters
  return y;
}

std::string to_string(PgstResult r) {
  switch (r) {
    case PgstResult::pgst:
      return "PGST";
    case PgstResult::not_strongly_cospectral:
      return "NoPGST-NotStronglyCospectral";
    case PgstResult::parity_fails:
      return "NoPGST-ParityFails";
  }
  return "?";
}

PgstVerdict decide_pgst(const SpectralDecomposition& sd, std::size_t a, std::size_t b) {
  if (a == b) throw InvalidArgument("decide_pgst: vertices must differ");
  PgstVerdict v;
  v.a = a;
  v.b = b;
  v.pair = strong_cospectrality(sd, a, b);
  if (!v.pair.strongly_cospectral) {
    v.result = PgstResult::not_strongly_cospectral;
    return v;
  }
  const SplittingData spl = splitting_field(v.pair.phi_plus * v.pair.phi_minus);
  const FieldPtr& K = spl.field;
  const FieldPoly plus = FieldPoly::from_int(K, v.pair.phi_plus);
  for (const auto& r : spl.roots()) (plus.eval(r).is_zero() ? v.lambdas : v.mus).push_back(r);

  // Unknowns (l_1..l_p, m_1..m_q): sum l lambda + sum m mu = 0 coefficient-wise, and
  // sum l + sum m = 0. Each row is scaled to a primitive integer row.
  std::vector<AlgebraicNumber> vars = v.lambdas;
  vars.insert(vars.end(), v.mus.begin(), v.mus.end());
  const std::size_t nv = vars.size(), D = K->degree();
  std::vector<std::vector<Int>> rows;
  auto push_row = [&](const std::vector<Rat>& row) {
    const Int m = lcm_of_denominators(row);
    std::vector<Int> r(row.size());
    Int g = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      r[j] = Rat(row[j] * m).get_num();
      g = gcd(g, r[j]);
    }
    if (g == 0) return;
    for (auto& x : r) x /= g;
    rows.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < D; ++i) {
    std::vector<Rat> row(nv);
    for (std::size_t j = 0; j < nv; ++j) row[j] = vars[j].coeffs().coeff(i);
    push_row(row);
  }
  push_row(std::vector<Rat>(nv, Rat(1)));
  IntMatrix M = rows.empty() ? IntMatrix(1, nv) : IntMatrix::from_rows(rows);
  v.kernel = integer_kernel_basis(M);

  v.result = PgstResult::pgst;
  for (const auto& kv : v.kernel) {
    Int s = 0;
    for (std::size_t j = v.lambdas.size(); j < nv; ++j) s += kv[j];
    if (mpz_odd_p(s.get_mpz_t())) {
      v.result = PgstResult::parity_fails;
      v.witness = kv;
      break;
    }
  }
  if (v.witness && !verify_parity_witness(v, *v.witness))
    throw ConsistencyError("decide_pgst: parity witness does not verify");
  return v;
}

PgstVerdict decide_pgst(const Graph& G, std::size_t a, std::size_t b) {
  return decide_pgst(spectral_decomposition(G), a, b);
}

bool verify_parity_witness(const PgstVerdict& v, const std::vector<Int>& lm) {
  const std::size_t p = v.lambdas.size(), q = v.mus.size();
  if (lm.size() != p + q || p + q == 0) return false;
  const FieldPtr& K = (p ? v.lambdas[0] : v.mus[0]).field();
  AlgebraicNumber acc = AlgebraicNumber::rational(K, 0);
  Int total = 0, msum = 0;
  for (std::size_t i = 0; i < p; ++i) {
    acc += v.lambdas[i] * Rat(lm[i]);
    total += lm[i];
  }
  for (std::size_t j = 0; j < q; ++j) {
    acc += v.mus[j] * Rat(lm[p + j]);
    total += lm[p + j];
    msum += lm[p + j];
  }
  return acc.is_zero() && total == 0 && mpz_odd_p(msum.get_mpz_t());
}

std::uint64_t moment_work(std::size_t support_size, unsigned ell) {
  if (support_size == 0) return 0;
  Int c = binomial(ell + support_size - 1, ell);
  if (c > Int(std::to_string(std::numeric_limits<std::uint64_t>::max()))) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::stoull(c.get_str()));
}

Rat even_moment(const SpectralDecomposition& sd, std::size_t a, std::size_t b, unsigned ell,
                const MomentOptions& options) {
  if (ell < 1) throw InvalidArgument("even_moment: ell must be at least 1");
  const FrequencyBasis fb = frequency_basis(sd, a, b);
  const std::size_t N = fb.support.size(), k = fb.k();
  if (N == 0) return 0;
  const std::uint64_t work = moment_work(N, ell);
  if (work > options.work_ceiling)
    throw ResourceLimit("even_moment: " + std::to_string(work) + " terms exceed the work ceiling " +
                        std::to_string(options.work_ceiling));
  const FieldPtr& K = sd.field();

  // |F|^(2 ell) = F^ell conj(F)^ell with real coefficients c_r: the torus average is the
  // sum over exponent vectors v of G_v^2, G_v the coefficient of e^{i v.z} in F^ell.
  std::vector<std::vector<AlgebraicNumber>> powers(N);
  for (std::size_t i = 0; i < N; ++i) {
    const AlgebraicNumber& c = sd.entry(fb.support[i], a, b);
    powers[i].push_back(AlgebraicNumber::rational(K, 1));
    for (unsigned j = 1; j <= ell; ++j) powers[i].push_back(powers[i].back() * c);
  }
  std::map<std::vector<long>, AlgebraicNumber> G;
  std::vector<long> v(k, 0);
  std::function<void(std::size_t, unsigned, const AlgebraicNumber&)> rec = [&](std::size_t i, unsigned left,
                                                                               const AlgebraicNumber& prod) {
    const unsigned lo = (i + 1 == N) ? left : 0;
    for (unsigned e = lo; e <= left; ++e) {
      AlgebraicNumber term = prod * powers[i][e] * Rat(binomial(left, e));
      for (std::size_t l = 0; l < k; ++l) v[l] += static_cast<long>(e) * fb.f(i, l).get_si();
      if (i + 1 == N) {
        auto [it, inserted] = G.try_emplace(v, term);
        if (!inserted) it->second += term;
      } else {
        rec(i + 1, left - e, term);
      }
      for (std::size_t l = 0; l < k; ++l) v[l] -= static_cast<long>(e) * fb.f(i, l).get_si();
    }
  };
  rec(0, ell, AlgebraicNumber::rational(K, 1));

  AlgebraicNumber total = AlgebraicNumber::rational(K, 0);
  for (const auto& [key, g] : G) total += g * g;
  return rational_or_throw(total, "even moment");
}

std::vector<SupremumBracket> supremum_estimate(const SpectralDecomposition& sd, std::size_t a, std::size_t b,
                                               unsigned max_ell, const MomentOptions& options) {
  if (max_ell < 1) throw InvalidArgument("supremum_estimate: max_ell must be at least 1");
  std::vector<SupremumBracket> out;
  const Rat one = 1;
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    SupremumBracket br;
    br.ell = ell;
    br.moment = even_moment(sd, a, b, ell, options);
    // floor((mu 2^(128 ell))^(1/(2 ell))) = floor(mu^(1/(2 ell)) 2^64)
    Int X = floor(mul_2exp(br.moment, 128L * ell)), r;
    mpz_root(r.get_mpz_t(), X.get_mpz_t(), 2UL * ell);
    br.lo = mul_2exp(Rat(r), -64);
    br.hi = std::min(mul_2exp(Rat(r + 1), -64), one);
    out.push_back(br);
  }
  return out;
}

std::string to_string(EntryClass c) {
  switch (c) {
    case EntryClass::periodic:
      return "Periodic";
    case EntryClass::axis_confined:
      return "AxisConfined";
    case EntryClass::generic:
      return "Generic";
  }
  return "?";
}

EntryClassification classify_entry(const SpectralDecomposition& sd, std::size_t a, std::size_t b) {
  EntryClassification c;
  c.periodic = true;
  for (std::size_t r : pair_support(sd, a, b)) c.periodic = c.periodic && sd.eigenvalues[r].as_rational().has_value();
  c.axis_confined = sd.graph.bipartite();
  c.primary = c.periodic ? EntryClass::periodic : c.axis_confined ? EntryClass::axis_confined : EntryClass::generic;
  return c;
}

}  // namespace irrwalk
