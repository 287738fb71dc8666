#pragma once

#include <compare>
#include <string>
#include <vector>

#include "folia/errors.hpp"
#include "folia/rational.hpp"

namespace folia {

class MultiPoly;

/// A simple extension Q[t]/(p) for a monic irreducible p of degree >= 2.
/// Instances are interned by the registry behind extend_field and live for
/// the whole process, so a raw pointer is a stable handle.
class NumberField {
 public:
  /// Monic minimal polynomial, low degree first; size() == degree() + 1.
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }

 private:
  friend const NumberField* extend_field(const std::vector<Rational>& minpoly);
  explicit NumberField(std::vector<Rational> minpoly) : minpoly_(std::move(minpoly)) {}

  std::vector<Rational> minpoly_;
};

/// nullptr denotes the rationals.
using FieldHandle = const NumberField*;

/// Thrown when a proposed minimal polynomial is reducible; carries a factor.
class ReducibleMinimalPolynomial : public ValidationError {
 public:
  ReducibleMinimalPolynomial(const std::string& what, std::vector<Rational> factor)
      : ValidationError(what), factor_(std::move(factor)) {}

  const std::vector<Rational>& factor() const { return factor_; }

 private:
  std::vector<Rational> factor_;
};

class FieldMismatch : public ValidationError {
 public:
  FieldMismatch() : ValidationError("operands live in different extension fields") {}
};

/// Checks that the polynomial (low degree first) is monic, irreducible and of
/// degree >= 2, and returns the interned field. Thread-safe.
const NumberField* extend_field(const std::vector<Rational>& minpoly);

/// Same, for a univariate MultiPoly over Q.
const NumberField* extend_field(const MultiPoly& minpoly);

/// An element of Q or of an interned simple extension.
///
/// Rational values carry no field. Extension elements store their coordinates
/// in the power basis 1, t, ..., t^(d-1). Rationals embed into every field;
/// combining elements of two different extensions throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : q_(std::move(v)) { q_.canonicalize(); }  // NOLINT

  /// Element with the given power-basis coordinates (reduced modulo minpoly).
  static Scalar in_field(FieldHandle field, std::vector<Rational> coords);
  /// The class of t in Q[t]/(p).
  static Scalar generator(FieldHandle field);

  FieldHandle field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (whatever field it is tagged with).
  bool is_rational() const;
  /// The rational value; throws ValidationError for non-rational elements.
  Rational to_rational() const;
  /// Power-basis coordinates, padded to the field degree (size 1 over Q).
  std::vector<Rational> coords() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Lexicographic on power-basis coordinates; only meaningful within one field.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  static FieldHandle common_field(const Scalar& a, const Scalar& b);
  std::vector<Rational> padded(FieldHandle f) const;

  FieldHandle field_ = nullptr;
  Rational q_;                  // value when field_ == nullptr
  std::vector<Rational> v_;     // coordinates when field_ != nullptr
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

std::string to_string(const Scalar& s, const std::string& generator = "t");

}  // namespace folia
