#ifndef NSALG_FACTOR_HPP
#define NSALG_FACTOR_HPP

#include <utility>
#include <vector>

#include "nsalg/number_field.hpp"
#include "nsalg/poly.hpp"
#include "nsalg/rational.hpp"

namespace nsalg {

/// Factors a nonzero rational polynomial into monic irreducible factors with
/// multiplicities; the product of factors^multiplicities times the leading
/// coefficient reconstitutes the input. Factors are sorted (degree, then
/// coefficients from the constant term up). Constants factor into the empty
/// list.
std::vector<std::pair<PolyQ, int>> factor_over_q(const PolyQ& p);

bool is_irreducible_over_q(const PolyQ& p);

/// Factors a nonzero polynomial over a number field K (Trager's norm method).
/// Throws std::domain_error when deg(p) exceeds degree_bound.
std::vector<std::pair<PolyNF, int>> factor_over_nf(const PolyNF& p, const FieldPtr& K,
                                                   int degree_bound = 8);

/// Resultant of two rational polynomials (Euclidean remainder sequence).
Rational resultant_q(const PolyQ& a, const PolyQ& b);

}  // namespace nsalg

#endif
