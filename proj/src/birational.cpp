#include "folia/birational.hpp"

#include "folia/poly_algorithms.hpp"

namespace folia {

namespace {

MultiPoly var3(int i) { return MultiPoly::variable(3, i); }

bool proportional(const std::array<Scalar, 3>& p, const std::array<Scalar, 3>& q) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(p[i] * q[j] - p[j] * q[i]).is_zero()) return false;
  return true;
}

QuadraticMap make_map(MapKind kind, std::string name, std::array<MultiPoly, 3> comps, ProjectivePoint ind,
                      ProjectiveLine line) {
  return QuadraticMap{kind, std::move(name), std::move(comps), std::move(ind), std::move(line)};
}

}  // namespace

Scalar determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

LinearFrame::LinearFrame(const Matrix3& m) : m_(m) {
  if (determinant(m_).is_zero()) throw ValidationError("frame matrix is singular");
  for (const auto& row : m_)
    for (const auto& v : row)
      if (!v.is_zero()) {
        if (v.is_one()) return;
        const Scalar inv = v.inverse();
        for (auto& r : m_)
          for (auto& w : r) w = w * inv;
        return;
      }
}

LinearFrame LinearFrame::identity() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Scalar(i == j ? 1 : 0);
  return LinearFrame(m);
}

Matrix3 LinearFrame::inverse() const {
  const Scalar det = determinant(m_);
  Matrix3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0]) / det;
    }
  return inv;
}

std::array<Scalar, 3> LinearFrame::apply(const std::array<Scalar, 3>& p) const {
  std::array<Scalar, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2];
  return out;
}

std::array<Scalar, 3> LinearFrame::apply_inverse(const std::array<Scalar, 3>& p) const {
  const Matrix3 inv = inverse();
  std::array<Scalar, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = inv[i][0] * p[0] + inv[i][1] * p[1] + inv[i][2] * p[2];
  return out;
}

LinearFrame frame_for(const ProjectiveLine& line, const ProjectivePoint& p) {
  if (!line.contains(p.coords())) throw ValidationError(to_string(p) + " does not lie on " + to_string(line));
  const auto span = line.spanning_points();
  std::array<Scalar, 3> sum, diff;
  for (int i = 0; i < 3; ++i) {
    sum[i] = span[0][i] + span[1][i];
    diff[i] = span[0][i] - span[1][i];
  }
  const std::array<std::array<Scalar, 3>, 4> candidates{span[0], span[1], sum, diff};
  const std::array<Scalar, 3>* other = nullptr;
  for (const auto& c : candidates)
    if (!proportional(c, p.coords())) {
      other = &c;
      break;
    }
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = (*other)[i];
    m[i][1] = p[i];
    m[i][2] = Scalar(i == line.pivot() ? 1 : 0);
  }
  return LinearFrame(m);
}

FoliationForm pullback_linear(const FoliationForm& f, const LinearFrame& frame) {
  const Matrix3& m = frame.matrix();
  std::array<MultiPoly, 3> images;
  for (int i = 0; i < 3; ++i) {
    images[i] = MultiPoly(3);
    for (int j = 0; j < 3; ++j) images[i] += var3(j).scaled(m[i][j]);
  }
  std::array<MultiPoly, 3> subst;
  for (int i = 0; i < 3; ++i) subst[i] = substitute(f.coefficient(i), images);
  std::array<MultiPoly, 3> out;
  for (int j = 0; j < 3; ++j) {
    out[j] = MultiPoly(3);
    for (int i = 0; i < 3; ++i) out[j] += subst[i].scaled(m[i][j]);
  }
  return make_foliation(out[0], out[1], out[2]);
}

const QuadraticMap& phi_map() {
  static const QuadraticMap m = [] {
    const MultiPoly x = var3(0), y = var3(1), z = var3(2);
    return make_map(MapKind::Phi, "phi", {x * z, -(y * z) + x * x, z * z}, ProjectivePoint(0, 1, 0),
                    ProjectiveLine(0, 0, 1));
  }();
  return m;
}

const QuadraticMap& i1_map() {
  static const QuadraticMap m = [] {
    const MultiPoly x = var3(0), y = var3(1), z = var3(2);
    return make_map(MapKind::I1, "I1", {x * y, y * y, x * x - y * z}, ProjectivePoint(0, 0, 1),
                    ProjectiveLine(0, 1, 0));
  }();
  return m;
}

const QuadraticMap& i2_map() {
  static const QuadraticMap m = [] {
    const MultiPoly x = var3(0), y = var3(1), z = var3(2);
    return make_map(MapKind::I2, "I2", {x * x, -(x * y) + z * z, x * z}, ProjectivePoint(0, 1, 0),
                    ProjectiveLine(1, 0, 0));
  }();
  return m;
}

std::vector<QuadraticMap> builtin_maps() { return {phi_map(), i1_map(), i2_map()}; }

const QuadraticMap& builtin_map(const std::string& name) {
  if (name == "phi") return phi_map();
  if (name == "I1") return i1_map();
  if (name == "I2") return i2_map();
  throw ValidationError("unknown map '" + name + "' (expected phi, I1 or I2)");
}

std::array<MultiPoly, 3> compose(const std::array<MultiPoly, 3>& s, const std::array<MultiPoly, 3>& t) {
  std::array<MultiPoly, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = substitute(s[i], t);
  return out;
}

std::optional<ProjectivePoint> apply_map(const QuadraticMap& s, const ProjectivePoint& p) {
  std::array<Scalar, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = s.components[i].evaluate(p.coords());
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) return std::nullopt;
  return ProjectivePoint(v);
}

std::array<MultiPoly, 3> pullback_components(const FoliationForm& f, const std::array<MultiPoly, 3>& s) {
  std::array<MultiPoly, 3> subst;
  for (int i = 0; i < 3; ++i) subst[i] = substitute(f.coefficient(i), s);
  std::array<MultiPoly, 3> out;
  for (int j = 0; j < 3; ++j) {
    out[j] = MultiPoly(3);
    for (int i = 0; i < 3; ++i) {
      const MultiPoly d = s[i].derivative(j);
      if (!d.is_zero() && !subst[i].is_zero()) out[j] += subst[i] * d;
    }
  }
  return out;
}

QuadraticPullback pullback_quadratic(const FoliationForm& f, const QuadraticMap& s) {
  QuadraticPullback out{FoliationForm{}, MultiPoly(3), pullback_components(f, s.components)};
  if (out.raw[0].is_zero() && out.raw[1].is_zero() && out.raw[2].is_zero())
    throw InvariantBreach("pulled-back form vanishes identically");
  out.form = make_foliation(out.raw[0], out.raw[1], out.raw[2], &out.extracted);
  return out;
}

BirationalStep frame_step(const FoliationForm& f, const LinearFrame& m) {
  return BirationalStep{StepKind::Frame, m, std::nullopt, std::nullopt, MultiPoly::constant(3, Scalar(1)),
                        pullback_linear(f, m)};
}

BirationalStep map_step(const FoliationForm& f, const QuadraticMap& s) {
  auto pb = pullback_quadratic(f, s);
  StepKind kind = s.kind == MapKind::Phi ? StepKind::Phi : s.kind == MapKind::I1 ? StepKind::I1 : StepKind::I2;
  return BirationalStep{kind, std::nullopt, s, s.contracted, pb.extracted, pb.form};
}

FoliationForm apply_step(const FoliationForm& f, const BirationalStep& step) {
  if (step.kind == StepKind::Frame) return pullback_linear(f, *step.frame);
  return pullback_quadratic(f, *step.map).form;
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::Frame: return "frame";
    case StepKind::Phi: return "phi";
    case StepKind::I1: return "I1";
    case StepKind::I2: return "I2";
  }
  return "?";
}

}  // namespace folia
