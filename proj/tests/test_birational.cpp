#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "folia/birational.hpp"
#include "folia/poly_algorithms.hpp"
#include "helpers.hpp"

using namespace folia;
using namespace testing_support;

namespace {

ProjectivePoint pt(long x, long y, long z) { return ProjectivePoint(Scalar(x), Scalar(y), Scalar(z)); }

Matrix3 int_matrix(std::array<std::array<long, 3>, 3> m) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = Scalar(m[i][j]);
  return out;
}

std::array<MultiPoly, 3> xyz(const char* a, const char* b, const char* c) { return {P(a), P(b), P(c)}; }

std::map<ProjectivePoint, int> rational_mu(const std::vector<SingularRecord>& s) {
  std::map<ProjectivePoint, int> out;
  for (const auto& r : s)
    if (!r.is_cluster()) out[r.point()] = r.mu;
  return out;
}

std::vector<FoliationForm> sample_forms() {
  std::vector<FoliationForm> out{lambda_example(2), lambda_example(3)};
  for (const auto& e : corpus()) out.push_back(e.form);
  return out;
}

}  // namespace

TEST_CASE("frame_for examples") {
  CHECK(frame_for(parse_line("z"), pt(0, 1, 0)) == LinearFrame::identity());
  const LinearFrame swap = frame_for(parse_line("y"), pt(0, 0, 1));
  CHECK(swap.matrix() == int_matrix({{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}));

  const ProjectiveLine l = parse_line("x + y + z");
  const LinearFrame m = frame_for(l, pt(1, -1, 0));
  CHECK_FALSE(determinant(m.matrix()).is_zero());
  // Images: (0:1:0) goes to p, and both generators of L land on z = 0.
  CHECK(ProjectivePoint(m.apply({Scalar(0), Scalar(1), Scalar(0)})) == pt(1, -1, 0));
  for (const auto& q : l.spanning_points()) CHECK(m.apply_inverse(q)[2].is_zero());
  CHECK(l.contains(m.apply({Scalar(1), Scalar(0), Scalar(0)})));
  CHECK_FALSE(l.contains(m.apply({Scalar(0), Scalar(0), Scalar(1)})));

  CHECK_THROWS_AS(frame_for(l, pt(1, 1, 1)), ValidationError);
}

TEST_CASE("frames are invertible and normalized") {
  CHECK_THROWS_AS(LinearFrame(int_matrix({{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}})), ValidationError);
  const LinearFrame m(int_matrix({{{0, 2, 0}, {2, 0, 0}, {0, 0, 4}}}));
  CHECK(m.matrix()[0][1] == Scalar(1));
  CHECK(m.matrix()[2][2] == Scalar(2));
  const std::array<Scalar, 3> p{Scalar(3), Scalar(-1), Scalar(5)};
  CHECK(m.apply_inverse(m.apply(p)) == p);
}

TEST_CASE("pullback_linear examples") {
  const FoliationForm f = lambda_example(2);
  CHECK(pullback_linear(f, LinearFrame::identity()) == f);

  const LinearFrame swap(int_matrix({{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}));
  // Substitute (x, z, y) and exchange the dy and dz slots.
  const std::array<MultiPoly, 3> s = xyz("x", "z", "y");
  const FoliationForm expected = make_foliation(substitute(f.a(), s), substitute(f.c(), s), substitute(f.b(), s));
  CHECK(pullback_linear(f, swap) == expected);
  CHECK(pullback_linear(pullback_linear(f, swap), swap) == f);
}

TEST_CASE("linear pullbacks move singular points by the inverse frame") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-3, 3);
  for (const auto& f : sample_forms()) {
    Matrix3 raw;
    do {
      for (auto& row : raw)
        for (auto& x : row) x = Scalar(d(rng));
    } while (determinant(raw).is_zero());
    const LinearFrame m(raw);
    const FoliationForm g = pullback_linear(f, m);
    CHECK(g.degree() == f.degree());
    const auto sf = singular_locus(f), sg = singular_locus(g);
    CHECK(darboux_check(g, sg).ok);
    CHECK(distinct_count(sf) == distinct_count(sg));
    const auto before = rational_mu(sf), after = rational_mu(sg);
    CHECK(before.size() == after.size());
    for (const auto& [p, mu] : before) {
      const ProjectivePoint q(m.apply_inverse(p.coords()));
      REQUIRE(after.count(q) == 1);
      CHECK(after.at(q) == mu);
    }
  }
}

TEST_CASE("built-in maps") {
  CHECK(phi_map().components == xyz("x*z", "-y*z + x^2", "z^2"));
  CHECK(i1_map().components == xyz("x*y", "y^2", "x^2 - y*z"));
  CHECK(i2_map().components == xyz("x^2", "-x*y + z^2", "x*z"));
  CHECK(phi_map().indeterminacy == pt(0, 1, 0));
  CHECK(i1_map().indeterminacy == pt(0, 0, 1));
  CHECK(i2_map().indeterminacy == pt(0, 1, 0));
  CHECK(phi_map().contracted == parse_line("z"));
  CHECK(i1_map().contracted == parse_line("y"));
  CHECK(i2_map().contracted == parse_line("x"));
  CHECK(builtin_maps().size() == 3);
  CHECK(builtin_map("I2").components == i2_map().components);
  CHECK_THROWS_AS(builtin_map("I3"), ValidationError);
}

TEST_CASE("involution laws") {
  CHECK(compose(phi_map().components, phi_map().components) == xyz("x*z^3", "y*z^3", "z^4"));
  CHECK(compose(i1_map().components, i1_map().components) == xyz("x*y^3", "y^4", "y^3*z"));
  CHECK(compose(i2_map().components, i2_map().components) == xyz("x^4", "x^3*y", "x^3*z"));
  const auto swap = xyz("x", "z", "y");
  CHECK(compose(swap, compose(phi_map().components, swap)) == i1_map().components);
}

TEST_CASE("phi is an isomorphism of z != 0") {
  std::vector<ProjectivePoint> images;
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y) {
      const ProjectivePoint p = pt(x, y, 1);
      const auto q = apply_map(phi_map(), p);
      REQUIRE(q.has_value());
      CHECK_FALSE((*q)[2].is_zero());
      CHECK(apply_map(phi_map(), *q) == p);
      images.push_back(*q);
    }
  std::sort(images.begin(), images.end());
  CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
  CHECK_FALSE(apply_map(phi_map(), pt(0, 1, 0)).has_value());
  CHECK(apply_map(phi_map(), pt(1, 5, 0)) == pt(0, 1, 0));
}

TEST_CASE("I1 on the worked example") {
  for (long lambda : {2L, 3L, 5L, -3L}) {
    const QuadraticPullback pb = pullback_quadratic(lambda_example(lambda), i1_map());
    const Rational l(lambda);
    const FoliationForm expected = F("-y*((2+l)*x^2 + l*y*z) dx + x*((2+l)*x^2 - y*z) dy + (1+l)*x*y^2 dz", {{"l", l}});
    CAPTURE(lambda);
    CHECK(pb.form == expected);
    CHECK(pb.form.degree() == 2);
    CHECK(pb.extracted == P("y^2"));
  }
}

TEST_CASE("the dz coefficient of a phi pullback") {
  for (const auto& f : sample_forms()) {
    const auto s = phi_map().components;
    const QuadraticPullback pb = pullback_quadratic(f, phi_map());
    const MultiPoly expected =
        P("x") * substitute(f.a(), s) - P("y") * substitute(f.b(), s) + P("2*z") * substitute(f.c(), s);
    CHECK(pb.raw[2] == expected);
    CHECK(pb.raw[0] == P("z") * substitute(f.a(), s) + P("2*x") * substitute(f.b(), s));
    CHECK(pb.raw[1] == -(P("z") * substitute(f.b(), s)));
    CHECK(pb.raw[0].total_degree() == 2 * f.degree() + 3);
  }
}

TEST_CASE("I2 after I1 on the worked example") {
  const FoliationForm f = pullback_quadratic(lambda_example(2), i1_map()).form;
  const QuadraticPullback pb = pullback_quadratic(f, i2_map());
  CHECK(pb.extracted == P("x^2"));
  CHECK(pb.form.degree() == 4);
  CHECK(restrict_to_line(pb.form, parse_line("x")).normal == P2("-v^5"));
  const auto s = singular_points(pb.form);
  REQUIRE(s.size() == 1);
  CHECK(s[0].point() == pt(0, 1, 0));
}

TEST_CASE("Euler identity after every pullback") {
  for (const auto& f : sample_forms()) {
    for (const auto& m : builtin_maps()) {
      const QuadraticPullback pb = pullback_quadratic(f, m);
      CHECK(euler_residual(pb.raw[0], pb.raw[1], pb.raw[2]).is_zero());
      CHECK(euler_residual(pb.form.a(), pb.form.b(), pb.form.c()).is_zero());
      CHECK(gcd_many(pb.form.coefficients()).is_constant());
    }
  }
}

TEST_CASE("quadratic pullbacks are bijective off the contracted lines") {
  for (const auto& f : sample_forms()) {
    for (const auto& m : builtin_maps()) {
      const int axis = m.contracted.pivot();
      const auto before = rational_mu(singular_locus(f));
      const auto after = rational_mu(singular_locus(pullback_quadratic(f, m).form));
      std::map<ProjectivePoint, int> mapped, expected;
      for (const auto& [p, mu] : after)
        if (!p[axis].is_zero()) mapped[*apply_map(m, p)] = mu;
      for (const auto& [p, mu] : before)
        if (!p[axis].is_zero()) expected[p] = mu;
      CAPTURE(to_string(f));
      CAPTURE(m.name);
      CHECK(mapped == expected);
    }
  }
}

TEST_CASE("recorded steps replay") {
  const FoliationForm f = lambda_example(3);
  const BirationalStep a = frame_step(f, frame_for(parse_line("x + y + z"), pt(1, -1, 0)));
  CHECK(a.kind == StepKind::Frame);
  CHECK(apply_step(f, a) == a.result);
  const BirationalStep b = map_step(a.result, phi_map());
  CHECK(b.kind == StepKind::Phi);
  CHECK(apply_step(a.result, b) == b.result);
  CHECK(b.contracted == parse_line("z"));
  CHECK(to_string(StepKind::I1) == "I1");
}
