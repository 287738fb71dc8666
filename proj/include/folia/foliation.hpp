#pragma once

#include <array>
#include <string>
#include <vector>

#include "folia/multipoly.hpp"

namespace folia {

/// omega = a dx + b dy + c dz on P^2, with a, b, c homogeneous of degree
/// N + 1, gcd-free and satisfying a*x + b*y + c*z = 0.
///
/// The stored triple keeps its scalar; comparisons go through normalized().
class FoliationForm {
 public:
  const MultiPoly& a() const { return coeffs_[0]; }
  const MultiPoly& b() const { return coeffs_[1]; }
  const MultiPoly& c() const { return coeffs_[2]; }
  const MultiPoly& coefficient(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::array<MultiPoly, 3>& coefficients() const { return coeffs_; }
  int degree() const { return degree_; }
  FieldHandle field() const;

  /// Same foliation scaled so the leading coefficient of the first nonzero
  /// entry of (a, b, c) is 1.
  FoliationForm normalized() const;

  friend bool operator==(const FoliationForm& f, const FoliationForm& g);

 private:
  friend FoliationForm make_foliation(const MultiPoly&, const MultiPoly&, const MultiPoly&, MultiPoly*);
  std::array<MultiPoly, 3> coeffs_;
  int degree_ = 0;
};

/// a*x + b*y + c*z.
MultiPoly euler_residual(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c);

/// Validates and divides out the common factor, which is stored in
/// *extracted when given (1 when there is none).
FoliationForm make_foliation(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                             MultiPoly* extracted = nullptr);

/// "(a) dx + (b) dy + (c) dz".
std::string to_string(const FoliationForm& f);

/// alpha*x + beta*y + gamma*z = 0, first nonzero coefficient 1.
class ProjectiveLine {
 public:
  ProjectiveLine(Scalar alpha, Scalar beta, Scalar gamma);
  /// From a homogeneous linear polynomial in x, y, z.
  static ProjectiveLine from_linear_form(const MultiPoly& l);
  /// The line through two distinct points.
  static ProjectiveLine through(const std::array<Scalar, 3>& p, const std::array<Scalar, 3>& q);

  const std::array<Scalar, 3>& coefficients() const { return coeffs_; }
  const Scalar& coefficient(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  /// Index of the first nonzero coefficient.
  int pivot() const { return pivot_; }
  MultiPoly linear_form() const;
  bool contains(const std::array<Scalar, 3>& p) const;

  /// Two canonical points spanning the line: e_i - l_i e_pivot for the two
  /// indices i != pivot, in increasing order.
  std::array<std::array<Scalar, 3>, 2> spanning_points() const;

  friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;

 private:
  std::array<Scalar, 3> coeffs_;
  int pivot_ = 0;
};

std::string to_string(const ProjectiveLine& l);

/// E du + F dv in the affine chart where coordinate `chart` equals 1; u, v
/// are the two remaining coordinates in increasing order.
struct AffineChartForm {
  MultiPoly e{2};
  MultiPoly f{2};
  int chart = 2;
};

AffineChartForm affine_chart(const FoliationForm& form, int chart);

/// Pullback of omega along P(s, t) = s*p + t*q, (p, q) the spanning points of
/// the line. It is tangency*(t ds - s dt); tangency is homogeneous of degree
/// N and vanishes identically exactly when the line is invariant. `normal`
/// is the coefficient of d(pivot) restricted to the line, which on an
/// invariant line cuts out the singular points lying on it.
struct LineRestriction {
  ProjectiveLine line;
  std::array<MultiPoly, 3> parametrization;
  MultiPoly tangency{2};
  MultiPoly normal{2};
  /// Names for s and t: the original coordinates when p and q are unit
  /// vectors, "s" and "t" otherwise.
  std::vector<std::string> names;
};

LineRestriction restrict_to_line(const FoliationForm& form, const ProjectiveLine& line);
bool is_line_invariant(const FoliationForm& form, const ProjectiveLine& line);

}  // namespace folia
