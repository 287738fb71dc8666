#pragma once

#include <array>
#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "folia/foliation.hpp"

namespace folia {

/// A point of P^2, normalized so the last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(Scalar x, Scalar y, Scalar z);
  explicit ProjectivePoint(const std::array<Scalar, 3>& c) : ProjectivePoint(c[0], c[1], c[2]) {}

  const std::array<Scalar, 3>& coords() const { return c_; }
  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  /// Index of the coordinate equal to 1.
  int chart() const;
  FieldHandle field() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  /// Compares z, then y, then x.
  friend std::strong_ordering operator<=>(const ProjectivePoint& p, const ProjectivePoint& q);

 private:
  std::array<Scalar, 3> c_;
};

std::string to_string(const ProjectivePoint& p);

/// The conjugates of a generic point whose coordinates lie in Q[t]/(p):
/// one point per root of p.
struct PointCluster {
  ProjectivePoint generic;

  FieldHandle field() const { return generic.field(); }
  int size() const { return generic.field()->degree(); }
};

/// "minpoly p(t); point (x(t):y(t):z(t))".
std::string to_string(const PointCluster& c);

struct SingularRecord {
  std::variant<ProjectivePoint, PointCluster> where;
  /// Per point; for clusters the common value at each conjugate. 0 when not computed.
  int mu = 0;

  bool is_cluster() const { return std::holds_alternative<PointCluster>(where); }
  const ProjectivePoint& point() const;
  /// Number of points represented.
  int size() const;
};

std::string to_string(const SingularRecord& r);

struct SingularOptions {
  /// First shear tried in the elimination; different values give
  /// independent computations of the same set.
  int first_shear = 0;
  /// Largest cluster size accepted.
  int max_cluster_degree = 8;
};

/// Common zeros of a, b, c, each once, rational points first (sorted), then
/// clusters. Milnor numbers are left at 0.
std::vector<SingularRecord> singular_points(const FoliationForm& f, const SingularOptions& opts = {});

/// singular_points with Milnor numbers filled in.
std::vector<SingularRecord> singular_locus(const FoliationForm& f, const SingularOptions& opts = {});

/// Intersection multiplicity at the origin of E = 0 and F = 0 (arity 2).
/// Throws ValidationError when E and F share a component through the origin.
int intersection_multiplicity(const MultiPoly& e, const MultiPoly& f);

/// Same quantity as the order at u = 0 of Res_v(E, F), after a shear that
/// makes E monic in v and leaves no other common zero on u = 0.
int resultant_multiplicity(const MultiPoly& e, const MultiPoly& f);

/// resultant_multiplicity, cross-checked against intersection_multiplicity
/// when the Bezout bound is at most 64.
int local_multiplicity(const MultiPoly& e, const MultiPoly& f);

/// Milnor number of the foliation at a singular point, possibly with
/// coordinates in an extension field.
int milnor_number(const FoliationForm& f, const ProjectivePoint& m);

/// Total count of distinct singular points, clusters counted by size.
int distinct_count(const std::vector<SingularRecord>& sing);

struct DarbouxReport {
  long sum = 0;
  long target = 0;
  bool ok = false;
};

DarbouxReport darboux_check(const FoliationForm& f);
DarbouxReport darboux_check(const FoliationForm& f, const std::vector<SingularRecord>& sing);

}  // namespace folia
