#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/birational.hpp"
#include "folia/poly_algorithms.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace folia;
using namespace testing_support;

namespace {

// Direct substitution of s*p + t*q into omega, giving the ds and dt parts.
std::array<MultiPoly, 2> substituted_form(const FoliationForm& f, const std::array<Scalar, 3>& p,
                                          const std::array<Scalar, 3>& q) {
  const MultiPoly s = MultiPoly::variable(2, 0), t = MultiPoly::variable(2, 1);
  std::array<MultiPoly, 3> param{MultiPoly(2), MultiPoly(2), MultiPoly(2)};
  for (int i = 0; i < 3; ++i) param[i] = s.scaled(p[i]) + t.scaled(q[i]);
  MultiPoly ds(2), dt(2);
  for (int i = 0; i < 3; ++i) {
    const MultiPoly ai = substitute(f.coefficient(i), param);
    ds += ai.scaled(p[i]);
    dt += ai.scaled(q[i]);
  }
  return {ds, dt};
}

// After a frame sending L to z = 0, dx and dy coefficients divisible by z.
bool divisible_after_frame(const FoliationForm& f, const ProjectiveLine& l) {
  const auto sp = l.spanning_points();
  const LinearFrame m = frame_for(l, ProjectivePoint(sp[0]));
  const FoliationForm g = pullback_linear(f, m);
  const MultiPoly z = P("z");
  return exact_divide(g.a(), z).has_value() && exact_divide(g.b(), z).has_value();
}

ProjectiveLine L(const std::string& s) { return parse_line(s); }

}  // namespace

TEST_CASE("make_foliation examples") {
  const FoliationForm f = lambda_example(2);
  CHECK(f.degree() == 1);
  CHECK(f.a() == P("2*y*z"));
  CHECK(euler_residual(f.a(), f.b(), f.c()).is_zero());

  CHECK_THROWS_AS(make_foliation(P("0"), P("x"), P("0")), ValidationError);
  CHECK_THROWS_AS(make_foliation(P("0"), P("0"), P("0")), ValidationError);
  CHECK_THROWS_AS(make_foliation(P("x^2"), P("x"), P("0")), ValidationError);
  CHECK_THROWS_AS(make_foliation(P("x*y + z"), P("0"), P("0")), ValidationError);

  MultiPoly extracted(3);
  const FoliationForm g = make_foliation(P("y*z"), P("-x*z"), P("0"), &extracted);
  // Oracle: the gcd is z and the quotient satisfies the Euler identity.
  CHECK(extracted == P("z"));
  CHECK(g.degree() == 0);
  CHECK(g.a() == P("y"));
  CHECK(g.b() == P("-x"));
  CHECK(g.c().is_zero());
  CHECK((P("y") * P("x") + P("-x") * P("y")).is_zero());
}

TEST_CASE("equality is up to a scalar") {
  const FoliationForm f = F("y dx - x dy + 0 dz");
  const FoliationForm g = F("-3*y dx + 3*x dy + 0 dz");
  CHECK(f == g);
  CHECK(f.normalized().a() == P("y"));
  CHECK_FALSE(f == lambda_example(2));
}

TEST_CASE("affine_chart examples") {
  const FoliationForm f = lambda_example(2);
  auto c = affine_chart(f, 2);
  // Substituting z = 1 into a = 2yz and b = xz.
  CHECK(c.e == P2("2*v"));
  CHECK(c.f == P2("u"));
  c = affine_chart(F("y dx - x dy + 0 dz"), 2);
  CHECK(c.e == P2("v"));
  CHECK(c.f == P2("-u"));
  // Chart x = 1: (b, c) with x = 1 in the coordinates (y, z).
  c = affine_chart(f, 0);
  CHECK(c.e == P2("v"));
  CHECK(c.f == P2("-3*u"));
}

TEST_CASE("restriction of a phi pullback to z = 0") {
  int generic = 0;
  for (const auto& entry : corpus()) {
    const FoliationForm& f = entry.form;
    const QuadraticPullback pb = pullback_quadratic(f, phi_map());
    // x * A(0, x^2, 0), in the coordinates (x, y) of the line.
    const std::array<MultiPoly, 3> at{P2("0"), P2("u^2"), P2("0")};
    const MultiPoly expected = P2("u") * substitute(f.a(), at);
    const std::array<MultiPoly, 3> on_line{P2("u"), P2("v"), P2("0")};
    CAPTURE(entry.name);
    CHECK(substitute(pb.raw[2], on_line) == expected);
    if (!pb.extracted.is_constant()) continue;
    // (0:1:0) is not singular, so nothing was divided out.
    ++generic;
    const LineRestriction r = restrict_to_line(pb.form, L("z"));
    CHECK(canonical_associate(r.normal) == canonical_associate(expected));
    CHECK(r.names == std::vector<std::string>{"x", "y"});
  }
  CHECK(generic >= 3);
}

TEST_CASE("restriction of the lambda example") {
  const FoliationForm f = lambda_example(2);
  const LineRestriction r = restrict_to_line(f, L("z"));
  CHECK(r.tangency.is_zero());
  const auto sp = L("z").spanning_points();
  const auto direct = substituted_form(f, sp[0], sp[1]);
  CHECK(direct[0].is_zero());
  CHECK(direct[1].is_zero());

  const LineRestriction r2 = restrict_to_line(f, L("x + y + z"));
  CHECK_FALSE(r2.tangency.is_zero());
  CHECK(r2.tangency.total_degree() == f.degree());
}

TEST_CASE("the final form of the worked example restricts to -z^5 on x = 0") {
  const FoliationForm f = lambda_example(2);
  const FoliationForm g = pullback_quadratic(pullback_quadratic(f, i1_map()).form, i2_map()).form;
  CHECK(g.degree() == 4);
  const LineRestriction r = restrict_to_line(g, L("x"));
  CHECK(r.tangency.is_zero());
  // Coordinates (y, z) on the line.
  CHECK(canonical_associate(r.normal) == P2("v^5"));
  CHECK(r.normal == P2("-v^5"));
}

TEST_CASE("is_line_invariant examples") {
  const FoliationForm f = lambda_example(2);
  CHECK(is_line_invariant(f, L("z")));
  CHECK(is_line_invariant(f, L("x")));
  CHECK(is_line_invariant(f, L("y")));
  CHECK_FALSE(is_line_invariant(f, L("x + y + z")));
  CHECK_FALSE(is_line_invariant(f, L("x - y")));

  const FoliationForm pencil = F("y dx - x dy + 0 dz");
  for (const char* l : {"x", "y", "x + y", "x - 5*y", "2*x + 3*y"}) CHECK(is_line_invariant(pencil, L(l)));
  CHECK_FALSE(is_line_invariant(pencil, L("z")));
  CHECK_FALSE(is_line_invariant(pencil, L("x + z")));
}

TEST_CASE("invariance agrees with substitution and with the frame criterion") {
  const std::vector<std::string> lines{"x", "y", "z", "x + y + z", "x - y", "y - 2*z", "x + 3*y - z",
                                       "x - z", "2*x + y", "y + z"};
  std::vector<FoliationForm> forms{lambda_example(2), lambda_example(3), F("y dx - x dy + 0 dz")};
  for (const auto& e : corpus()) forms.push_back(e.form);
  for (const auto& f : forms) {
    for (const auto& s : lines) {
      const ProjectiveLine l = L(s);
      const bool inv = is_line_invariant(f, l);
      const auto sp = l.spanning_points();
      const auto d = substituted_form(f, sp[0], sp[1]);
      CAPTURE(to_string(f));
      CAPTURE(s);
      CHECK(inv == (d[0].is_zero() && d[1].is_zero()));
      CHECK(inv == divisible_after_frame(f, l));
      CHECK(inv == restrict_to_line(f, l).tangency.is_zero());
      const auto r = restrict_to_line(f, l);
      if (!r.tangency.is_zero()) {
        CHECK(r.tangency.total_degree() <= f.degree() + 1);
        // ds part is t * tangency and dt part is -s * tangency.
        CHECK(d[0] == r.tangency * P2("v"));
        CHECK(d[1] == -(r.tangency * P2("u")));
      }
    }
  }
}

TEST_CASE("line parsing") {
  CHECK(to_string(L("2*x + 4*y = 0")) == "x + 2*y");
  CHECK(L("y - z").pivot() == 1);
  CHECK_THROWS_AS(L("x*y"), ValidationError);
  CHECK_THROWS_AS(L("x + 1"), ValidationError);
  CHECK_THROWS_AS(L("0"), ValidationError);
  CHECK(L("x + y + z").contains({Scalar(1), Scalar(-1), Scalar(0)}));
}

TEST_CASE("form parsing") {
  CHECK(F("lambda*y*z dx + x*z dy - (1+lambda)*x*y dz", {{"lambda", Rational(2)}}) == lambda_example(2));
  CHECK(F("y dx - x dy + 0 dz").degree() == 0);
  CHECK(F("y; -x; 0") == F("y dx - x dy + 0 dz"));
  CHECK(F("# comment\ny dx + 0 dz - x dy") == F("y dx - x dy + 0 dz"));
  try {
    F("x dx + y dy");
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("dz") != std::string::npos);
    CHECK(msg.find("x^2 + y^2") != std::string::npos);
  }
  CHECK_THROWS_AS(F("x dx + y dy +"), ParseError);
  CHECK_THROWS_AS(F("lambda*y dx - x dy + 0 dz"), ParseError);
  CHECK_THROWS_AS(F("x^2 dx + y dy + 0 dz"), ValidationError);
}

TEST_CASE("text round trip") {
  std::vector<FoliationForm> forms{lambda_example(2), lambda_example(3)};
  for (const auto& e : corpus()) {
    forms.push_back(e.form);
    forms.push_back(pullback_quadratic(e.form, phi_map()).form);
    forms.push_back(pullback_quadratic(e.form, i1_map()).form);
  }
  for (const auto& f : forms) {
    const std::string s = to_string(f);
    const FoliationForm g = F(s);
    CHECK(g == f);
    CHECK(to_string(g) == s);
  }
}
