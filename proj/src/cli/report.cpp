#include "irrwalk/cli/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "irrwalk/cli/graph_io.hpp"
#include "irrwalk/errors.hpp"

namespace irrwalk {

namespace {

Json int_to_json(const Int& x) { return x.get_str(); }

Json int_vector(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

Json interval_to_json(const DyadicInterval& iv) { return Json::array({rat_to_json(iv.lo), rat_to_json(iv.hi)}); }

DyadicInterval interval_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("interval must be a pair of rationals");
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

void maybe_approx(Json& j, double x, const ReportOptions& o) {
  if (o.approx) j["approx"] = round12(x);
}

Json rat_value(const Rat& q, const ReportOptions& o) {
  if (!o.approx) return rat_to_json(q);
  return Json{{"value", rat_to_json(q)}, {"approx", round12(to_double(q))}};
}

}  // namespace

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json rat_to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json int_poly_to_json(const IntPoly& p) { return int_vector(p.coeffs()); }

IntPoly int_poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be an array of coefficients");
  std::vector<Int> c;
  for (const auto& x : j) c.push_back(parse_integer(x.get<std::string>()));
  return IntPoly(std::move(c));
}

Json field_to_json(const FieldPtr& K, const ReportOptions& o) {
  Json j{{"degree", K->degree()}, {"min_poly", int_poly_to_json(K->min_poly())},
         {"interval", interval_to_json(K->is_rationals() ? K->interval() : K->interval(o.bits))}};
  return j;
}

FieldPtr field_from_json(const Json& j) {
  IntPoly mp = int_poly_from_json(j.at("min_poly"));
  if (mp.degree() == 1) return NumberField::rationals();
  return NumberField::create(mp, interval_from_json(j.at("interval")));
}

Json algebraic_to_json(const AlgebraicNumber& x, const ReportOptions& o) {
  Json c = Json::array();
  for (const auto& q : x.coeffs().coeffs()) c.push_back(rat_to_json(q));
  Json j{{"coeffs", c}, {"interval", interval_to_json(x.enclosure(o.bits))}};
  maybe_approx(j, x.approx(), o);
  return j;
}

AlgebraicNumber algebraic_from_json(const FieldPtr& K, const Json& j) {
  std::vector<Rat> c;
  for (const auto& q : j.at("coeffs")) c.push_back(rat_from_json(q));
  return AlgebraicNumber(K, RatPoly(std::move(c)));
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"n", g.n()}, {"edges", edges}, {"graph6", to_graph6(g)}};
}

Json spectra_report(const SpectralDecomposition& sd, const ReportOptions& o) {
  Json eig = Json::array();
  for (std::size_t r = 0; r < sd.size(); ++r) {
    Json e = algebraic_to_json(sd.eigenvalues[r], o);
    e["multiplicity"] = sd.multiplicities[r];
    eig.push_back(std::move(e));
  }
  return Json{{"graph", graph_to_json(sd.graph)},
              {"char_poly", int_poly_to_json(char_poly(sd.graph))},
              {"min_poly", int_poly_to_json(sd.splitting.source_poly)},
              {"field", field_to_json(sd.field(), o)},
              {"eigenvalues", eig}};
}

Json amm_report(const AverageMixingMatrix& m, const ReportOptions& o) {
  Json rows = Json::array();
  for (const auto& r : m.entries) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(rat_value(x, o));
    rows.push_back(std::move(row));
  }
  return Json{{"matrix", rows}};
}

Json cospectral_report(const PairDecomposition& pd) {
  Json signs = Json::object();
  for (auto [r, s] : pd.signs) signs[std::to_string(r)] = s;
  return Json{{"a", pd.a},
              {"b", pd.b},
              {"strongly_cospectral", pd.strongly_cospectral},
              {"phi_plus", int_poly_to_json(pd.phi_plus)},
              {"phi_minus", int_poly_to_json(pd.phi_minus)},
              {"phi_zero", int_poly_to_json(pd.phi_zero)},
              {"signs", signs}};
}

Json pgst_report(const PgstVerdict& v, const ReportOptions& o) {
  Json j{{"a", v.a}, {"b", v.b}, {"result", to_string(v.result)}, {"strongly_cospectral", v.pair.strongly_cospectral}};
  if (v.result == PgstResult::not_strongly_cospectral) return j;
  Json lam = Json::array(), mu = Json::array(), ker = Json::array();
  for (const auto& x : v.lambdas) lam.push_back(algebraic_to_json(x, o));
  for (const auto& x : v.mus) mu.push_back(algebraic_to_json(x, o));
  for (const auto& k : v.kernel) ker.push_back(int_vector(k));
  const FieldPtr& K = (!v.lambdas.empty() ? v.lambdas : v.mus).at(0).field();
  j["phi_plus"] = int_poly_to_json(v.pair.phi_plus);
  j["phi_minus"] = int_poly_to_json(v.pair.phi_minus);
  j["field"] = field_to_json(K, o);
  j["lambdas"] = lam;
  j["mus"] = mu;
  j["kernel"] = ker;
  j["witness"] = v.witness ? int_vector(*v.witness) : Json(nullptr);
  return j;
}

Json basis_report(const FrequencyBasis& fb, const ReportOptions& o) {
  Json w = Json::array(), f = Json::array(), rel = Json::array(), th = Json::array();
  for (const auto& x : fb.thetas) th.push_back(algebraic_to_json(x, o));
  for (const auto& x : fb.w) w.push_back(algebraic_to_json(x, o));
  for (std::size_t r = 0; r < fb.f.rows(); ++r) f.push_back(int_vector(fb.f.row(r)));
  for (const auto& c : fb.relations) rel.push_back(int_vector(c));
  Json j{{"support", fb.support}, {"k", fb.k()}, {"thetas", th}, {"w", w}, {"f", f}, {"relations", rel}};
  if (!fb.thetas.empty()) j["field"] = field_to_json(fb.thetas[0].field(), o);
  return j;
}

Json symmetry_report(std::size_t a, std::size_t b, const FrequencyBasis& fb) {
  RotationOrder ro = rotation_symmetry_order(fb);
  Json j{{"a", a}, {"b", b}};
  if (ro.unbounded()) {
    j["order"] = "unbounded";
  } else {
    j["order"] = ro.value->fits_slong_p() ? Json(ro.value->get_si()) : Json(ro.value->get_str());
    Json shift = Json::array();
    if (auto y = rotation_shift(fb, *ro.value))
      for (const auto& c : *y) shift.push_back(rat_to_json(c));
    j["shift"] = shift;
  }
  return j;
}

Json classify_report(std::size_t a, std::size_t b, const EntryClassification& c) {
  return Json{{"a", a},
              {"b", b},
              {"primary", to_string(c.primary)},
              {"periodic", c.periodic},
              {"axis_confined", c.axis_confined}};
}

Json moment_report(std::size_t a, std::size_t b, unsigned ell, const Rat& moment, const ReportOptions& o) {
  return Json{{"a", a}, {"b", b}, {"ell", ell}, {"moment", rat_value(moment, o)}};
}

Json supremum_report(std::size_t a, std::size_t b, const std::vector<SupremumBracket>& br, const ReportOptions& o) {
  Json list = Json::array();
  for (const auto& x : br)
    list.push_back(Json{{"ell", x.ell}, {"moment", rat_value(x.moment, o)}, {"lo", rat_value(x.lo, o)},
                        {"hi", rat_value(x.hi, o)}});
  Json j{{"a", a}, {"b", b}, {"brackets", list}};
  if (!br.empty()) j["lower_bound"] = rat_value(br.back().lo, o);
  return j;
}

}  // namespace irrwalk
