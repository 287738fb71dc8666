#include "folia/foliation.hpp"

#include "folia/poly_algorithms.hpp"

namespace folia {

namespace {

MultiPoly var3(int i) { return MultiPoly::variable(3, i); }

}  // namespace

FieldHandle FoliationForm::field() const {
  for (const auto& c : coeffs_)
    if (c.field() != nullptr) return c.field();
  return nullptr;
}

FoliationForm FoliationForm::normalized() const {
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    if (c.leading_coef().is_one()) return *this;
    const Scalar inv = c.leading_coef().inverse();
    FoliationForm out = *this;
    for (auto& d : out.coeffs_) d = d.scaled(inv);
    return out;
  }
  return *this;
}

bool operator==(const FoliationForm& f, const FoliationForm& g) {
  if (f.degree_ != g.degree_) return false;
  const FoliationForm nf = f.normalized();
  const FoliationForm ng = g.normalized();
  return nf.coeffs_ == ng.coeffs_;
}

MultiPoly euler_residual(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c) {
  return a * var3(0) + b * var3(1) + c * var3(2);
}

FoliationForm make_foliation(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, MultiPoly* extracted) {
  const std::array<MultiPoly, 3> in{a, b, c};
  int deg = -1;
  for (const auto& p : in) {
    if (p.arity() != 3) throw ValidationError("foliation coefficients must be polynomials in x, y, z");
    if (!p.is_homogeneous()) throw ValidationError("coefficient " + to_string(p) + " is not homogeneous");
    if (p.is_zero()) continue;
    if (deg >= 0 && p.total_degree() != deg)
      throw ValidationError("coefficients have different degrees");
    deg = p.total_degree();
  }
  if (deg < 0) throw ValidationError("all three coefficients are zero");
  const MultiPoly residual = euler_residual(a, b, c);
  if (!residual.is_zero())
    throw ValidationError("Euler identity fails: a*x + b*y + c*z = " + to_string(residual));

  const MultiPoly g = gcd_many(in);
  FoliationForm f;
  if (g.is_constant()) {
    f.coeffs_ = in;
    if (extracted != nullptr) *extracted = MultiPoly::constant(3, Scalar(1));
  } else {
    for (std::size_t i = 0; i < 3; ++i) {
      auto q = exact_divide(in[i], g);
      if (!q) throw InvariantBreach("gcd does not divide a coefficient");
      f.coeffs_[i] = std::move(*q);
    }
    if (extracted != nullptr) *extracted = g;
  }
  int n = -1;
  for (const auto& p : f.coeffs_)
    if (!p.is_zero()) n = p.total_degree();
  f.degree_ = n - 1;
  if (f.degree_ < 0) throw InvariantBreach("foliation of negative degree");
  return f;
}

std::string to_string(const FoliationForm& f) {
  return "(" + to_string(f.a()) + ") dx + (" + to_string(f.b()) + ") dy + (" + to_string(f.c()) + ") dz";
}

ProjectiveLine::ProjectiveLine(Scalar alpha, Scalar beta, Scalar gamma) : coeffs_{alpha, beta, gamma} {
  pivot_ = -1;
  for (int i = 0; i < 3; ++i)
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) {
      pivot_ = i;
      break;
    }
  if (pivot_ < 0) throw ValidationError("a line needs a nonzero coefficient");
  const Scalar inv = coeffs_[static_cast<std::size_t>(pivot_)].inverse();
  for (auto& c : coeffs_) c = c * inv;
}

ProjectiveLine ProjectiveLine::from_linear_form(const MultiPoly& l) {
  if (l.arity() != 3 || l.total_degree() != 1 || !l.is_homogeneous())
    throw ValidationError("a line must be a nonzero linear form in x, y, z");
  return ProjectiveLine(l.coefficient(make_key(1, 0, 0)), l.coefficient(make_key(0, 1, 0)),
                        l.coefficient(make_key(0, 0, 1)));
}

ProjectiveLine ProjectiveLine::through(const std::array<Scalar, 3>& p, const std::array<Scalar, 3>& q) {
  const Scalar a = p[1] * q[2] - p[2] * q[1];
  const Scalar b = p[2] * q[0] - p[0] * q[2];
  const Scalar c = p[0] * q[1] - p[1] * q[0];
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw ValidationError("points do not span a line");
  return ProjectiveLine(a, b, c);
}

MultiPoly ProjectiveLine::linear_form() const {
  MultiPoly out(3);
  for (int i = 0; i < 3; ++i) out += var3(i).scaled(coeffs_[static_cast<std::size_t>(i)]);
  return out;
}

bool ProjectiveLine::contains(const std::array<Scalar, 3>& p) const {
  return (coeffs_[0] * p[0] + coeffs_[1] * p[1] + coeffs_[2] * p[2]).is_zero();
}

std::array<std::array<Scalar, 3>, 2> ProjectiveLine::spanning_points() const {
  std::array<std::array<Scalar, 3>, 2> out;
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot_) continue;
    std::array<Scalar, 3> pt{Scalar(0), Scalar(0), Scalar(0)};
    pt[static_cast<std::size_t>(i)] = Scalar(1);
    pt[static_cast<std::size_t>(pivot_)] = -coeffs_[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(k++)] = pt;
  }
  return out;
}

std::string to_string(const ProjectiveLine& l) { return to_string(l.linear_form()); }

AffineChartForm affine_chart(const FoliationForm& form, int chart) {
  if (chart < 0 || chart > 2) throw ValidationError("chart index must be 0, 1 or 2");
  AffineChartForm out;
  out.chart = chart;
  std::array<int, 3> positions{};
  int k = 0;
  for (int i = 0; i < 3; ++i) positions[static_cast<std::size_t>(i)] = i == chart ? -1 : k++;
  std::array<MultiPoly, 2> pair;
  k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == chart) continue;
    std::vector<Term> terms;
    for (const auto& t : form.coefficient(i).terms()) {
      std::array<unsigned, 3> e{0, 0, 0};
      for (int v = 0; v < 3; ++v)
        if (v != chart) e[static_cast<std::size_t>(positions[static_cast<std::size_t>(v)])] = t.exponent(v);
      terms.push_back(Term{make_key(e[0], e[1], 0), t.coef});
    }
    pair[static_cast<std::size_t>(k++)] = MultiPoly::from_terms(2, std::move(terms));
  }
  out.e = pair[0];
  out.f = pair[1];
  return out;
}

LineRestriction restrict_to_line(const FoliationForm& form, const ProjectiveLine& line) {
  LineRestriction r{line, {}, MultiPoly(2), MultiPoly(2), {}};
  const auto pts = line.spanning_points();
  const MultiPoly s = MultiPoly::variable(2, 0);
  const MultiPoly t = MultiPoly::variable(2, 1);
  for (std::size_t i = 0; i < 3; ++i) r.parametrization[i] = s.scaled(pts[0][i]) + t.scaled(pts[1][i]);

  std::array<MultiPoly, 3> restricted;
  for (int i = 0; i < 3; ++i) restricted[static_cast<std::size_t>(i)] = substitute(form.coefficient(i), r.parametrization);
  MultiPoly ds_coef(2);
  for (std::size_t i = 0; i < 3; ++i) ds_coef += restricted[i].scaled(pts[0][i]);
  auto h = exact_divide(ds_coef, t);
  if (!h) throw InvariantBreach("restricted form is not a multiple of t ds - s dt");
  r.tangency = std::move(*h);
  r.normal = restricted[static_cast<std::size_t>(line.pivot())];

  bool unit = true;
  for (const auto& p : pts)
    for (std::size_t i = 0; i < 3; ++i)
      if (static_cast<int>(i) == line.pivot() && !p[i].is_zero()) unit = false;
  if (unit) {
    const auto names = default_variable_names(3);
    for (int i = 0; i < 3; ++i)
      if (i != line.pivot()) r.names.push_back(names[static_cast<std::size_t>(i)]);
  } else {
    r.names = {"s", "t"};
  }
  return r;
}

bool is_line_invariant(const FoliationForm& form, const ProjectiveLine& line) {
  return restrict_to_line(form, line).tangency.is_zero();
}

}  // namespace folia
