#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "folia/singular.hpp"

namespace folia {

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

/// Invertible 3x3 matrix M acting on columns: new coordinates X correspond
/// to the old point M*X. Scaled so the first nonzero entry is 1.
class LinearFrame {
 public:
  explicit LinearFrame(const Matrix3& m);
  static LinearFrame identity();

  const Matrix3& matrix() const { return m_; }
  Matrix3 inverse() const;
  /// M*p.
  std::array<Scalar, 3> apply(const std::array<Scalar, 3>& p) const;
  /// M^-1 * p.
  std::array<Scalar, 3> apply_inverse(const std::array<Scalar, 3>& p) const;

  friend bool operator==(const LinearFrame&, const LinearFrame&) = default;

 private:
  Matrix3 m_;
};

Scalar determinant(const Matrix3& m);

/// Frame sending the line to (z = 0) and the point to (0:1:0).
LinearFrame frame_for(const ProjectiveLine& line, const ProjectivePoint& p);

/// M^T * omega(M X), renormalized.
FoliationForm pullback_linear(const FoliationForm& f, const LinearFrame& m);

enum class MapKind { Phi, I1, I2 };

/// Quadratic involution (P:Q:R) with its indeterminacy point and the line it
/// contracts (onto the indeterminacy point).
struct QuadraticMap {
  MapKind kind;
  std::string name;
  std::array<MultiPoly, 3> components;
  ProjectivePoint indeterminacy;
  ProjectiveLine contracted;
};

const QuadraticMap& phi_map();
const QuadraticMap& i1_map();
const QuadraticMap& i2_map();
std::vector<QuadraticMap> builtin_maps();
/// Looks up "phi", "I1" or "I2".
const QuadraticMap& builtin_map(const std::string& name);

/// s(t(X)) componentwise.
std::array<MultiPoly, 3> compose(const std::array<MultiPoly, 3>& s, const std::array<MultiPoly, 3>& t);

/// The point S(p), or nullopt at indeterminacy.
std::optional<ProjectivePoint> apply_map(const QuadraticMap& s, const ProjectivePoint& p);

struct QuadraticPullback {
  FoliationForm form;
  /// Common factor divided out of the raw coefficients.
  MultiPoly extracted{3};
  /// sum_i a_i(S) dS_i, before division.
  std::array<MultiPoly, 3> raw;
};

QuadraticPullback pullback_quadratic(const FoliationForm& f, const QuadraticMap& s);

/// The raw coefficients sum_i a_i(S) dS_i for arbitrary quadratic components.
std::array<MultiPoly, 3> pullback_components(const FoliationForm& f, const std::array<MultiPoly, 3>& s);

enum class StepKind { Frame, Phi, I1, I2 };

struct BirationalStep {
  StepKind kind;
  std::optional<LinearFrame> frame;
  std::optional<QuadraticMap> map;
  /// Line contracted by the map, in the coordinates of the result.
  std::optional<ProjectiveLine> contracted;
  MultiPoly extracted{3};
  FoliationForm result;
};

BirationalStep frame_step(const FoliationForm& f, const LinearFrame& m);
BirationalStep map_step(const FoliationForm& f, const QuadraticMap& s);
/// Re-applies the recorded map to f.
FoliationForm apply_step(const FoliationForm& f, const BirationalStep& step);

std::string to_string(StepKind k);

}  // namespace folia
