#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "folia/number_field.hpp"

namespace folia {

/// Exponent vector packed so that integer order is graded lexicographic
/// order with x > y > z: [total degree | e0 | e1 | e2], 16 bits each.
/// Keys of a product are the sums of the factors' keys.
using MonomialKey = std::uint64_t;

MonomialKey make_key(unsigned e0, unsigned e1 = 0, unsigned e2 = 0);

struct Term {
  MonomialKey key;
  Scalar coef;

  unsigned exponent(int var) const { return static_cast<unsigned>((key >> (32 - 16 * var)) & 0xFFFFU); }
  unsigned degree() const { return static_cast<unsigned>(key >> 48); }
};

/// Sparse polynomial in 1, 2 or 3 variables over a Scalar field.
///
/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficients and unique exponents; the total degree and homogeneity flag
/// are cached on every mutation.
class MultiPoly {
 public:
  explicit MultiPoly(int arity = 3);

  static MultiPoly constant(int arity, const Scalar& c);
  static MultiPoly variable(int arity, int index);
  static MultiPoly monomial(int arity, std::array<unsigned, 3> exps, const Scalar& c);
  /// Merges duplicate exponents and drops zeros.
  static MultiPoly from_terms(int arity, std::vector<Term> terms);

  int arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].degree() == 0); }
  /// -1 for the zero polynomial.
  int total_degree() const { return total_degree_; }
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const { return homogeneous_; }
  int degree_in(int var) const;
  /// Smallest exponent of var over all terms (0 for the zero polynomial).
  int low_degree_in(int var) const;

  const Term& leading_term() const { return terms_.front(); }
  const Scalar& leading_coef() const { return terms_.front().coef; }
  Scalar constant_term() const;
  Scalar coefficient(MonomialKey key) const;
  /// The extension field of the coefficients, nullptr when all are rational.
  FieldHandle field() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Scalar& c) const;
  /// Multiplies by the monomial with the given key.
  MultiPoly shifted(MonomialKey key) const;
  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(int var) const;

  /// c[k] is the coefficient of var^k, a polynomial not involving var.
  std::vector<MultiPoly> coefficients_in(int var) const;
  static MultiPoly from_coefficients_in(int arity, int var, const std::vector<MultiPoly>& coeffs);

  /// Sum of the terms of the given total degree.
  MultiPoly homogeneous_part(int degree) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Substitutes a scalar for one variable; the arity is unchanged.
  MultiPoly partial_evaluate(int var, const Scalar& value) const;
  /// Dense univariate coefficients (low first) of a polynomial in var only.
  std::vector<Scalar> to_dense(int var) const;
  static MultiPoly from_dense(int arity, int var, const std::vector<Scalar>& coeffs);

  /// Re-embeds into another arity, mapping variable i to positions[i]; the
  /// dropped variables must not occur.
  MultiPoly reembed(int new_arity, std::span<const int> positions) const;

 private:
  void refresh();

  int arity_;
  std::vector<Term> terms_;
  int total_degree_ = -1;
  bool homogeneous_ = true;
};

/// Canonical text: graded-lex order, explicit '*', '^' powers, p/q coefficients.
std::string to_string(const MultiPoly& p, const std::vector<std::string>& names = {});
std::vector<std::string> default_variable_names(int arity);

}  // namespace folia
