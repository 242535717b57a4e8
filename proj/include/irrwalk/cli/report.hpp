#pragma once

#include <json.hpp>
#include <string>

#include "irrwalk/geometry/geometry.hpp"

namespace irrwalk {

using Json = nlohmann::json;

struct ReportOptions {
  unsigned long bits = 64;  // width 2^-bits of emitted enclosures
  bool approx = false;      // add decimal "approx" fields next to exact values
};

// Doubles rounded to 12 significant digits so emitted bytes do not depend on printing details.
double round12(double x);

Json rat_to_json(const Rat& q);  // "p/q" string
Rat rat_from_json(const Json& j);
Json int_poly_to_json(const IntPoly& p);
IntPoly int_poly_from_json(const Json& j);

// {"degree", "min_poly", "interval"}; the field is recreated from min_poly and interval.
Json field_to_json(const FieldPtr& K, const ReportOptions& o);
FieldPtr field_from_json(const Json& j);

// {"coeffs": powers of the field generator, "interval": enclosure of the value}.
Json algebraic_to_json(const AlgebraicNumber& x, const ReportOptions& o);
AlgebraicNumber algebraic_from_json(const FieldPtr& K, const Json& j);

Json graph_to_json(const Graph& g);

Json spectra_report(const SpectralDecomposition& sd, const ReportOptions& o);
Json amm_report(const AverageMixingMatrix& m, const ReportOptions& o);
Json cospectral_report(const PairDecomposition& pd);
Json pgst_report(const PgstVerdict& v, const ReportOptions& o);
Json basis_report(const FrequencyBasis& fb, const ReportOptions& o);
Json symmetry_report(std::size_t a, std::size_t b, const FrequencyBasis& fb);
Json classify_report(std::size_t a, std::size_t b, const EntryClassification& c);
Json moment_report(std::size_t a, std::size_t b, unsigned ell, const Rat& moment, const ReportOptions& o);
Json supremum_report(std::size_t a, std::size_t b, const std::vector<SupremumBracket>& br, const ReportOptions& o);

}  // namespace irrwalk
