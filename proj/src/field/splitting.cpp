#include "irrwalk/field/splitting.hpp"

#include <algorithm>

#include "irrwalk/algebra/factor.hpp"
#include "irrwalk/algebra/matrix.hpp"
#include "irrwalk/errors.hpp"

namespace irrwalk {

std::vector<AlgebraicNumber> SplittingData::roots() const {
  std::vector<AlgebraicNumber> r;
  r.reserve(root_polys.size());
  for (const auto& p : root_polys) r.emplace_back(field, p);
  return r;
}

void sort_descending(std::vector<AlgebraicNumber>& xs) {
  std::sort(xs.begin(), xs.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) > 0; });
}

namespace {

AlgebraicNumber substitute(const RatPoly& q, const AlgebraicNumber& x) {
  AlgebraicNumber acc = AlgebraicNumber::rational(x.field(), 0);
  const auto& c = q.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + AlgebraicNumber::rational(x.field(), c[i]);
  return acc;
}

FieldPoly substitute(const FieldPoly& p, const AlgebraicNumber& x) {
  std::vector<AlgebraicNumber> c;
  for (const auto& a : p.coeffs()) c.push_back(substitute(a.coeffs(), x));
  return FieldPoly(x.field(), std::move(c));
}

// With E = K[x]/(g(x - s alpha)) and gamma = x, returns the rational polynomial q with
// q(gamma) = alpha, found by writing the powers of gamma in the Q-basis alpha^i x^j.
RatPoly old_generator_in_powers_of_gamma(const TragerFactor& t) {
  const FieldPtr& K = t.factor.field();
  const std::size_t n = K->degree();
  const AlgebraicNumber alpha = AlgebraicNumber::generator(K);
  const FieldPoly g = t.factor.shift(alpha * Rat(-t.shift));
  const std::size_t k = g.degree().value(), N = n * k;

  std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N));
  std::vector<AlgebraicNumber> power(k, AlgebraicNumber::rational(K, 0));
  power[0] = AlgebraicNumber::rational(K, 1);
  for (std::size_t col = 0; col < N; ++col) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) A[j * n + i][col] = power[j].coeffs().coeff(i);
    // power *= x modulo the monic g.
    AlgebraicNumber top = power[k - 1];
    for (std::size_t j = k - 1; j > 0; --j) power[j] = power[j - 1] - top * g.coeff(j);
    power[0] = -(top * g.coeff(0));
  }
  std::vector<Rat> b(N);
  b[1] = 1;  // alpha = alpha^1 x^0
  auto x = solve_rational(std::move(A), std::move(b));
  if (!x) throw ConsistencyError("splitting_field: singular change of basis");
  return RatPoly(std::move(*x));
}

struct Adjoined {
  FieldPtr field;
  AlgebraicNumber old_generator;  // alpha of the previous field, inside the new one
  AlgebraicNumber root;           // the adjoined root beta
};

// L = Q[gamma] with gamma = beta + s*alpha, beta a root of g over K = Q[alpha].
Adjoined adjoin(const TragerFactor& t) {
  const FieldPtr& K = t.factor.field();
  // Integral monic generator c*gamma.
  IntPoly P = primitive_part(t.shifted_norm);
  const Int c_scale = P.lc();
  IntPoly M = monic_root_scaling(P);
  auto real = isolate_real_roots(M);
  if (real.size() != M.size() - 1) throw InvalidArgument("splitting_field: polynomial has non-real roots");
  FieldPtr L = make_certified_field(std::move(M), real.back());
  const AlgebraicNumber gamma = AlgebraicNumber::generator(L) * Rat(Int(1), c_scale);

  AlgebraicNumber alpha_L = AlgebraicNumber::rational(L, 0);
  if (!K->is_rationals()) {
    const RatPoly a = old_generator_in_powers_of_gamma(t);
    std::vector<Rat> c = a.coeffs();
    Rat scale = 1;
    for (auto& q : c) {
      q *= scale;
      scale /= Rat(c_scale);
    }
    alpha_L = AlgebraicNumber(L, RatPoly(std::move(c)));
  }
  AlgebraicNumber beta = gamma - alpha_L * Rat(t.shift);
  return {L, alpha_L, beta};
}

}  // namespace

SplittingData splitting_field(const IntPoly& p, const SplittingOptions& options) {
  if (p.is_zero()) throw InvalidArgument("splitting_field: zero polynomial");
  SplittingData out;
  out.source_poly = p;
  FieldPtr K = NumberField::rationals();
  if (p.is_constant()) {
    out.field = K;
    return out;
  }
  const IntPoly sf = squarefree_part(p);
  if (isolate_real_roots(sf).size() != sf.size() - 1)
    throw InvalidArgument("splitting_field: polynomial has non-real roots");

  std::vector<AlgebraicNumber> roots;
  std::vector<FieldPoly> pending;
  for (const IntPoly& f : factor_squarefree(sf)) pending.push_back(FieldPoly::from_int(K, f).monic());

  while (true) {
    std::vector<TragerFactor> nonlinear;
    for (const FieldPoly& g : pending) {
      if (g.degree() == 1u) {
        roots.push_back(-g.coeff(0));
        continue;
      }
      for (auto& t : factor_squarefree_over_field(g)) {
        if (t.factor.degree() == 1u)
          roots.push_back(-t.factor.coeff(0));
        else
          nonlinear.push_back(std::move(t));
      }
    }
    if (nonlinear.empty()) break;

    auto best = std::min_element(nonlinear.begin(), nonlinear.end(), [](const TragerFactor& a, const TragerFactor& b) {
      return a.factor.degree() < b.factor.degree();
    });
    const std::size_t next_degree = K->degree() * best->factor.degree().value();
    if (next_degree > options.max_field_degree)
      throw ResourceLimit("splitting_field: field degree " + std::to_string(next_degree) + " exceeds the limit " +
                          std::to_string(options.max_field_degree));

    Adjoined adj = adjoin(*best);
    for (auto& r : roots) r = substitute(r.coeffs(), adj.old_generator);
    roots.push_back(adj.root);
    pending.clear();
    for (auto it = nonlinear.begin(); it != nonlinear.end(); ++it) {
      FieldPoly g = substitute(it->factor, adj.old_generator);
      if (it == best) {
        auto q = exact_div(g, FieldPoly::linear(adj.root));
        if (!q) throw ConsistencyError("splitting_field: adjoined element is not a root");
        g = std::move(*q);
      }
      if (!g.is_constant()) pending.push_back(std::move(g));
    }
    K = adj.field;
  }

  // Roots found before the last extension were mapped forward; make sure all live in K.
  for (auto& r : roots)
    if (r.field() != K) throw ConsistencyError("splitting_field: root left in an intermediate field");

  sort_descending(roots);
  const FieldPoly source = FieldPoly::from_int(K, sf);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!source.eval(roots[i]).is_zero()) throw ConsistencyError("splitting_field: root check failed");
    if (i > 0 && roots[i] == roots[i - 1]) throw ConsistencyError("splitting_field: repeated root");
  }
  if (roots.size() != sf.size() - 1) throw ConsistencyError("splitting_field: wrong number of roots");
  out.field = K;
  for (const auto& r : roots) out.root_polys.push_back(r.coeffs());
  return out;
}

}  // namespace irrwalk
