#pragma once

#include <cstddef>
#include <vector>

#include "irrwalk/field/field_poly.hpp"

namespace irrwalk {

// Splitting field of a polynomial, with every distinct root written as a rational
// polynomial in the primitive element.
struct SplittingData {
  FieldPtr field;
  std::vector<RatPoly> root_polys;  // descending real value
  IntPoly source_poly;

  std::vector<AlgebraicNumber> roots() const;
};

struct SplittingOptions {
  // ResourceLimit is thrown before adjoining a root would exceed this field degree.
  std::size_t max_field_degree = 5040;
};

// Iteratively adjoins roots of nonlinear factors (squarefree part of p) until it splits.
SplittingData splitting_field(const IntPoly& p, const SplittingOptions& options = {});

// Elements in descending certified order.
void sort_descending(std::vector<AlgebraicNumber>& xs);

}  // namespace irrwalk
