#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "folia/multipoly.hpp"

namespace folia {

/// Canonical representative up to a nonzero scalar: over Q the integer
/// primitive associate with positive leading coefficient, over an extension
/// the monic associate.
MultiPoly canonical_associate(const MultiPoly& p);

/// Greatest common divisor, normalized with canonical_associate.
/// gcd(0, 0) = 0. Throws FieldMismatch for incompatible extension fields.
MultiPoly gcd_poly(const MultiPoly& f, const MultiPoly& g);
MultiPoly gcd_many(std::span<const MultiPoly> polys);

/// Quotient when g divides f exactly, std::nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Sylvester resultant of f and g with respect to var, taken with the
/// actual degrees of f and g in var. Throws ValidationError when var occurs
/// in neither input.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Composition f(images[0], ..., images[k-1]); the result has the arity of
/// the images.
MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images);

/// Irreducible factorization of a univariate polynomial over Q:
/// f = content * prod(factor^multiplicity), factors monic and sorted.
struct PolyFactorization {
  Rational content;
  std::vector<std::pair<MultiPoly, int>> factors;
};
PolyFactorization factor_univariate(const MultiPoly& f);

}  // namespace folia
