#include "folia/singular.hpp"

#include <algorithm>

#include "folia/dense.hpp"
#include "folia/factor.hpp"
#include "folia/poly_algorithms.hpp"

namespace folia {

namespace {

using SPoly = dense::Poly<Scalar>;

SPoly squarefree_part(const SPoly& g) {
  const SPoly d = dense::derivative(g);
  if (dense::degree(d) < 0) return dense::monic(g);
  const SPoly h = dense::gcd(g, d);
  return dense::monic(dense::divmod(g, h).first);
}

/// Coefficients in y of p(alpha, y), low first.
SPoly specialize_first(const MultiPoly& p, const Scalar& alpha) {
  SPoly out = p.partial_evaluate(0, alpha).to_dense(1);
  dense::trim(out);
  return out;
}

SingularRecord make_record(const std::array<Scalar, 3>& c, FieldHandle field) {
  ProjectivePoint pt(c);
  if (field == nullptr) return SingularRecord{pt, 0};
  return SingularRecord{PointCluster{pt}, 0};
}

FieldHandle field_for(const QPoly& p, const SingularOptions& opts) {
  const int d = static_cast<int>(p.size()) - 1;
  if (d > opts.max_cluster_degree)
    throw AlgorithmAbort("singular points need an extension of degree " + std::to_string(d) + " (limit " +
                         std::to_string(opts.max_cluster_degree) + ")");
  return extend_field(p);
}

QPoly to_qpoly(const MultiPoly& r, int var) {
  QPoly q;
  for (const auto& c : r.to_dense(var)) q.push_back(c.to_rational());
  return q;
}

bool affine_points(const MultiPoly& a, const MultiPoly& b, int shear, const SingularOptions& opts,
                   std::vector<SingularRecord>& out) {
  if (a.is_zero() || b.is_zero()) {
    const MultiPoly& other = a.is_zero() ? b : a;
    if (other.is_constant() && !other.is_zero()) return true;
    throw InvariantBreach("chart coefficients share a component");
  }
  const MultiPoly X = MultiPoly::variable(2, 0);
  const MultiPoly Y = MultiPoly::variable(2, 1);
  const std::array<MultiPoly, 2> images{X - Y.scaled(Scalar(shear)), Y};
  const MultiPoly as = substitute(a, images);
  const MultiPoly bs = substitute(b, images);
  if (as.degree_in(1) == 0 && bs.degree_in(1) == 0) return true;
  const MultiPoly r = resultant(as, bs, 1);
  if (r.is_zero()) throw InvariantBreach("chart coefficients share a component");
  if (r.is_constant()) return true;

  std::vector<SingularRecord> found;
  for (const auto& [p, mult] : factor_univariate(to_qpoly(r, 0)).factors) {
    (void)mult;
    FieldHandle field = nullptr;
    Scalar alpha;
    if (p.size() == 2) {
      alpha = Scalar(-p[0]);
    } else {
      field = field_for(p, opts);
      alpha = Scalar::generator(field);
    }
    const SPoly ga = specialize_first(as, alpha);
    const SPoly gb = specialize_first(bs, alpha);
    SPoly g = dense::degree(ga) < 0 ? gb : dense::degree(gb) < 0 ? ga : dense::gcd(ga, gb);
    if (dense::degree(g) < 0) throw InvariantBreach("chart coefficients share a component");
    g = squarefree_part(g);
    if (dense::degree(g) == 0) continue;
    if (dense::degree(g) > 1) return false;
    const Scalar y0 = -g[0] / g[1];
    const Scalar x0 = alpha - Scalar(shear) * y0;
    found.push_back(make_record({x0, y0, Scalar(1)}, field));
  }
  out.insert(out.end(), found.begin(), found.end());
  return true;
}

void points_at_infinity(const FoliationForm& f, const SingularOptions& opts, std::vector<SingularRecord>& out) {
  std::vector<MultiPoly> restricted;
  for (const auto& c : f.coefficients()) restricted.push_back(c.partial_evaluate(2, Scalar(0)));
  const MultiPoly g = gcd_many(restricted);
  if (g.is_zero()) throw InvariantBreach("z divides every coefficient");
  if (g.is_constant()) return;
  const MultiPoly gx = g.partial_evaluate(1, Scalar(1));
  if (gx.total_degree() < g.total_degree()) out.push_back(make_record({Scalar(1), Scalar(0), Scalar(0)}, nullptr));
  if (gx.total_degree() <= 0) return;
  for (const auto& [p, mult] : factor_univariate(to_qpoly(gx, 0)).factors) {
    (void)mult;
    if (p.size() == 2) {
      out.push_back(make_record({Scalar(-p[0]), Scalar(1), Scalar(0)}, nullptr));
    } else {
      FieldHandle field = field_for(p, opts);
      out.push_back(make_record({Scalar::generator(field), Scalar(1), Scalar(0)}, field));
    }
  }
}

}  // namespace

ProjectivePoint::ProjectivePoint(Scalar x, Scalar y, Scalar z) : c_{std::move(x), std::move(y), std::move(z)} {
  for (int i = 2; i >= 0; --i) {
    const Scalar& v = c_[static_cast<std::size_t>(i)];
    if (v.is_zero()) continue;
    if (!v.is_one()) {
      const Scalar inv = v.inverse();
      for (auto& w : c_) w = w * inv;
    }
    return;
  }
  throw ValidationError("a projective point needs a nonzero coordinate");
}

int ProjectivePoint::chart() const {
  for (int i = 2; i >= 0; --i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
  return 2;
}

FieldHandle ProjectivePoint::field() const {
  for (const auto& v : c_)
    if (v.field() != nullptr) return v.field();
  return nullptr;
}

std::strong_ordering operator<=>(const ProjectivePoint& p, const ProjectivePoint& q) {
  for (int i = 2; i >= 0; --i) {
    const auto c = p.c_[static_cast<std::size_t>(i)] <=> q.c_[static_cast<std::size_t>(i)];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const ProjectivePoint& p) {
  return "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
}

std::string to_string(const PointCluster& c) {
  std::vector<Scalar> coeffs(c.field()->minpoly().begin(), c.field()->minpoly().end());
  return "minpoly " + to_string(MultiPoly::from_dense(1, 0, coeffs)) + "; point " + to_string(c.generic);
}

const ProjectivePoint& SingularRecord::point() const {
  if (const auto* p = std::get_if<ProjectivePoint>(&where)) return *p;
  return std::get<PointCluster>(where).generic;
}

int SingularRecord::size() const {
  if (const auto* c = std::get_if<PointCluster>(&where)) return c->size();
  return 1;
}

std::string to_string(const SingularRecord& r) {
  std::string s = r.is_cluster() ? to_string(std::get<PointCluster>(r.where)) : to_string(r.point());
  if (r.mu > 0) s += " mu=" + std::to_string(r.mu);
  return s;
}

std::vector<SingularRecord> singular_points(const FoliationForm& f, const SingularOptions& opts) {
  std::vector<SingularRecord> out;
  points_at_infinity(f, opts, out);
  const AffineChartForm chart = affine_chart(f, 2);
  bool done = false;
  for (int k = 0; k < 32 && !done; ++k) {
    const int shear = opts.first_shear + (k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    done = affine_points(chart.e, chart.f, shear, opts, out);
  }
  if (!done) throw AlgorithmAbort("no separating shear found for the singular points");
  std::stable_sort(out.begin(), out.end(), [](const SingularRecord& r, const SingularRecord& s) {
    if (r.is_cluster() != s.is_cluster()) return !r.is_cluster();
    if (r.is_cluster()) return false;
    return r.point() < s.point();
  });
  for (const auto& r : out)
    for (const auto& c : f.coefficients())
      if (!c.evaluate(r.point().coords()).is_zero()) throw InvariantBreach("computed singular point is not a zero");
  return out;
}

std::vector<SingularRecord> singular_locus(const FoliationForm& f, const SingularOptions& opts) {
  auto out = singular_points(f, opts);
  for (auto& r : out) r.mu = milnor_number(f, r.point());
  return out;
}

int intersection_multiplicity(const MultiPoly& e, const MultiPoly& f) {
  if (e.arity() != 2 || f.arity() != 2) throw ValidationError("intersection multiplicity needs two bivariate polynomials");
  MultiPoly F = e;
  MultiPoly G = f;
  const MultiPoly v = MultiPoly::variable(2, 1);
  const MonomialKey vkey = v.leading_term().key;
  const MonomialKey ukey = MultiPoly::variable(2, 0).leading_term().key;
  if (e.is_zero() || f.is_zero()) throw ValidationError("curves share a component through the point");
  const MultiPoly common = gcd_poly(e, f);
  if (!common.is_constant() && common.constant_term().is_zero())
    throw ValidationError("curves share a component through the point");
  // Terms above the Bezout bound lie in m * <F, G> locally and can be dropped.
  const int bound = std::max(F.total_degree(), 0) * std::max(G.total_degree(), 0);
  auto truncate = [bound](const MultiPoly& p) {
    if (p.total_degree() <= bound) return canonical_associate(p);
    std::vector<Term> terms;
    for (const auto& t : p.terms())
      if (static_cast<int>(t.degree()) <= bound) terms.push_back(t);
    return canonical_associate(MultiPoly::from_terms(2, std::move(terms)));
  };
  F = truncate(F);
  G = truncate(G);
  int acc = 0;
  auto restrict_v0 = [](const MultiPoly& p) {
    SPoly r = p.partial_evaluate(1, Scalar(0)).to_dense(0);
    dense::trim(r);
    return r;
  };
  for (long budget = 1000000; budget > 0; --budget) {
    if (F.is_zero() || G.is_zero()) throw ValidationError("curves share a component through the point");
    if (!F.constant_term().is_zero() || !G.constant_term().is_zero()) return acc;
    SPoly fr = restrict_v0(F);
    SPoly gr = restrict_v0(G);
    int r = dense::degree(fr);
    int s = dense::degree(gr);
    if (r < 0 && s < 0) throw ValidationError("curves share a component through the point");
    if (r < 0) {
      std::swap(F, G);
      std::swap(fr, gr);
      std::swap(r, s);
    }
    if (s < 0) {
      int order = 0;
      while (fr[static_cast<std::size_t>(order)].is_zero()) ++order;
      acc += order;
      std::vector<Term> terms = G.terms();
      for (auto& t : terms) t.key -= vkey;
      G = MultiPoly::from_terms(2, std::move(terms));
      continue;
    }
    if (r > s) {
      std::swap(F, G);
      std::swap(fr, gr);
      std::swap(r, s);
    }
    const Scalar c = gr.back() / fr.back();
    G = truncate(G - F.shifted(ukey * static_cast<MonomialKey>(s - r)).scaled(c));
  }
  throw AlgorithmAbort("intersection multiplicity iteration budget exhausted");
}

int resultant_multiplicity(const MultiPoly& e, const MultiPoly& f) {
  if (e.arity() != 2 || f.arity() != 2) throw ValidationError("intersection multiplicity needs two bivariate polynomials");
  if (e.is_zero() || f.is_zero()) throw ValidationError("curves share a component through the point");
  if (!e.constant_term().is_zero() || !f.constant_term().is_zero()) return 0;
  const MultiPoly u = MultiPoly::variable(2, 0);
  const MultiPoly v = MultiPoly::variable(2, 1);
  for (int k = 0; k < 64; ++k) {
    const int shear = k % 2 == 0 ? k / 2 : -(k + 1) / 2;
    const std::array<MultiPoly, 2> images{u + v.scaled(Scalar(shear)), v};
    const MultiPoly es = substitute(e, images);
    const MultiPoly fs = substitute(f, images);
    if (es.degree_in(1) != es.total_degree()) continue;
    SPoly e0 = specialize_first(es, Scalar(0));
    SPoly f0 = specialize_first(fs, Scalar(0));
    if (dense::degree(e0) < 0 && dense::degree(f0) < 0) throw ValidationError("curves share a component through the point");
    const SPoly g = dense::degree(e0) < 0 ? f0 : dense::degree(f0) < 0 ? e0 : dense::gcd(e0, f0);
    int nonzero = 0;
    for (const auto& c : g) nonzero += c.is_zero() ? 0 : 1;
    if (nonzero != 1) continue;
    const MultiPoly r = resultant(es, fs, 1);
    if (r.is_zero()) throw ValidationError("curves share a component through the point");
    return r.low_degree_in(0);
  }
  throw AlgorithmAbort("no shear separates the point for the resultant multiplicity");
}

int local_multiplicity(const MultiPoly& e, const MultiPoly& f) {
  const int bezout = std::max(e.total_degree(), 0) * std::max(f.total_degree(), 0);
  const int by_resultant = resultant_multiplicity(e, f);
  if (bezout > 64) return by_resultant;
  const int by_recursion = intersection_multiplicity(e, f);
  if (by_recursion != by_resultant)
    throw InvariantBreach("intersection multiplicity " + std::to_string(by_recursion) + " disagrees with resultant order " +
                          std::to_string(by_resultant));
  return by_recursion;
}

int milnor_number(const FoliationForm& f, const ProjectivePoint& m) {
  for (const auto& c : f.coefficients())
    if (!c.evaluate(m.coords()).is_zero()) throw ValidationError(to_string(m) + " is not a singular point");
  const int chart = m.chart();
  const AffineChartForm local = affine_chart(f, chart);
  std::array<MultiPoly, 2> images{MultiPoly(2), MultiPoly(2)};
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == chart) continue;
    images[static_cast<std::size_t>(k)] = MultiPoly::variable(2, k) + MultiPoly::constant(2, m[i]);
    ++k;
  }
  return local_multiplicity(substitute(local.e, images), substitute(local.f, images));
}

int distinct_count(const std::vector<SingularRecord>& sing) {
  int n = 0;
  for (const auto& r : sing) n += r.size();
  return n;
}

DarbouxReport darboux_check(const FoliationForm& f, const std::vector<SingularRecord>& sing) {
  DarbouxReport r;
  for (const auto& s : sing) r.sum += static_cast<long>(s.mu) * s.size();
  const long n = f.degree();
  r.target = n * n + n + 1;
  r.ok = r.sum == r.target;
  return r;
}

DarbouxReport darboux_check(const FoliationForm& f) { return darboux_check(f, singular_locus(f)); }

}  // namespace folia
