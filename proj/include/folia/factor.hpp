#pragma once

#include <utility>
#include <vector>

#include "folia/rational.hpp"

namespace folia {

using QPoly = std::vector<Rational>;  // low degree first

struct UnivariateFactorization {
  Rational content;                          // the leading coefficient of the input
  std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, with multiplicity
};

/// Squarefree decomposition followed by Zassenhaus factorization of each
/// squarefree part (modular factorization, Hensel lifting, recombination).
/// Factors are sorted by degree, then by coefficients from the constant term.
UnivariateFactorization factor_univariate(const QPoly& f);

/// Yun's algorithm; the parts are monic and pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const QPoly& f);

}  // namespace folia
