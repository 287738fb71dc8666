#include "folia/poly_algorithms.hpp"

#include <algorithm>
#include <array>

#include "folia/dense.hpp"
#include "folia/factor.hpp"

namespace folia {

namespace {

void require_same_arity(const MultiPoly& f, const MultiPoly& g) {
  if (f.arity() != g.arity()) throw ValidationError("polynomials have different arities");
}

FieldHandle common_field(std::span<const MultiPoly> polys) {
  FieldHandle f = nullptr;
  for (const auto& p : polys) {
    FieldHandle g = p.field();
    if (g == nullptr) continue;
    if (f != nullptr && f != g) throw FieldMismatch();
    f = g;
  }
  return f;
}

bool key_divides(MonomialKey small, MonomialKey big) {
  for (int v = 0; v < 3; ++v) {
    const unsigned a = static_cast<unsigned>((small >> (32 - 16 * v)) & 0xFFFFU);
    const unsigned b = static_cast<unsigned>((big >> (32 - 16 * v)) & 0xFFFFU);
    if (a > b) return false;
  }
  return true;
}

MultiPoly leading_coefficient_in(const MultiPoly& p, int var) {
  auto coeffs = p.coefficients_in(var);
  return coeffs.empty() ? MultiPoly(p.arity()) : coeffs.back();
}

int main_variable(const MultiPoly& f, const MultiPoly& g) {
  for (int v = 0; v < f.arity(); ++v)
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) return v;
  return -1;
}

MultiPoly gcd_general(const MultiPoly& f, const MultiPoly& g);

MultiPoly content_in(const MultiPoly& p, int var) {
  MultiPoly c(p.arity());
  for (const auto& coeff : p.coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff : gcd_general(c, coeff);
    if (c.is_constant()) return MultiPoly::constant(p.arity(), Scalar(1));
  }
  return canonical_associate(c);
}

MultiPoly primitive_part_in(const MultiPoly& p, int var) {
  if (p.is_zero()) return p;
  MultiPoly c = content_in(p, var);
  if (c.is_constant()) return canonical_associate(p);
  return canonical_associate(*exact_divide(p, c));
}

/// Sparse pseudo-remainder of a by b in var (up to a power of lc(b)).
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, int var) {
  const int db = b.degree_in(var);
  const MultiPoly lcb = leading_coefficient_in(b, var);
  std::array<unsigned, 3> unit{0, 0, 0};
  unit[var] = 1;
  const MonomialKey step = make_key(unit[0], unit[1], unit[2]);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const MultiPoly lca = leading_coefficient_in(a, var);
    a = a * lcb - (lca * b).shifted(step * static_cast<MonomialKey>(da - db));
  }
  return a;
}

MultiPoly gcd_general(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return canonical_associate(g);
  if (g.is_zero()) return canonical_associate(f);
  const int var = main_variable(f, g);
  if (var < 0) return MultiPoly::constant(f.arity(), Scalar(1));
  if (f.degree_in(var) == 0) return gcd_general(f, content_in(g, var));
  if (g.degree_in(var) == 0) return gcd_general(g, content_in(f, var));

  const MultiPoly cf = content_in(f, var);
  const MultiPoly cg = content_in(g, var);
  const MultiPoly c = gcd_general(cf, cg);
  MultiPoly a = cf.is_constant() ? f : *exact_divide(f, cf);
  MultiPoly b = cg.is_constant() ? g : *exact_divide(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      b = MultiPoly::constant(f.arity(), Scalar(1));
      break;
    }
    a = std::move(b);
    b = primitive_part_in(r, var);
  }
  return canonical_associate(c * primitive_part_in(b, var));
}

/// Certifies that the polynomials have no common factor by restricting them
/// to an affine line p + t*q with top(polys[0])(q) != 0: a common factor h
/// would then restrict to a polynomial of degree deg h.
bool certified_coprime(std::span<const MultiPoly> polys) {
  static const std::array<std::array<long, 3>, 6> directions{
      {{1, 1, 1}, {1, 2, 3}, {1, -1, 2}, {2, 1, -3}, {1, 3, -2}, {3, -2, 1}}};
  static const std::array<std::array<long, 3>, 2> bases{{{2, -1, 3}, {-3, 1, 2}}};
  const int arity = polys[0].arity();
  const MultiPoly top = polys[0].homogeneous_part(polys[0].total_degree());
  int attempts = 0;
  for (const auto& q : directions) {
    std::vector<Scalar> qv(q.begin(), q.begin() + arity);
    if (top.evaluate(qv).is_zero()) continue;
    const auto& p = bases[static_cast<std::size_t>(attempts)];
    std::vector<MultiPoly> images;
    for (int v = 0; v < arity; ++v)
      images.push_back(MultiPoly::constant(1, Scalar(p[v])) +
                       MultiPoly::monomial(1, {1, 0, 0}, Scalar(q[v])));
    dense::Poly<Scalar> g;
    bool first = true;
    for (const auto& f : polys) {
      auto r = substitute(f, images).to_dense(0);
      dense::trim(r);
      g = first ? dense::monic(r) : dense::gcd(g, r);
      first = false;
      if (dense::degree(g) == 0) return true;
    }
    if (++attempts == static_cast<int>(bases.size())) break;
  }
  return false;
}

MultiPoly substitute_rec(const MultiPoly& f, int var, std::span<const MultiPoly> images,
                         std::vector<std::vector<MultiPoly>>& powers, int out_arity) {
  auto power = [&](int v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(out_arity, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  MultiPoly out(out_arity);
  if (f.is_zero()) return out;
  const int arity = f.arity();
  if (var == arity - 1) {
    for (const auto& t : f.terms()) out += power(var, t.exponent(var)).scaled(t.coef);
    return out;
  }
  const auto coeffs = f.coefficients_in(var);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    MultiPoly inner = substitute_rec(coeffs[k], var + 1, images, powers, out_arity);
    out += k == 0 ? inner : power(var, static_cast<unsigned>(k)) * inner;
  }
  return out;
}

MultiPoly resultant_rec(const MultiPoly& f, const MultiPoly& g, int var) {
  const int arity = f.arity();
  int other = -1;
  for (int v = 0; v < arity; ++v)
    if (v != var && (f.degree_in(v) > 0 || g.degree_in(v) > 0)) {
      other = v;
      break;
    }
  if (other < 0) {
    const Scalar r = dense::resultant(f.to_dense(var), g.to_dense(var));
    return MultiPoly::constant(arity, r);
  }
  const int df = f.degree_in(var);
  const int dg = g.degree_in(var);
  const int bound = df * g.degree_in(other) + dg * f.degree_in(other);
  const MultiPoly lcf = leading_coefficient_in(f, var);
  const MultiPoly lcg = leading_coefficient_in(g, var);

  std::vector<Scalar> xs;
  std::vector<MultiPoly> table;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    const Scalar c(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    if (lcf.partial_evaluate(other, c).is_zero() || lcg.partial_evaluate(other, c).is_zero()) continue;
    xs.push_back(c);
    table.push_back(resultant_rec(f.partial_evaluate(other, c), g.partial_evaluate(other, c), var));
  }
  // Newton divided differences, in place.
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      table[i] = (table[i] - table[i - 1]).scaled(Scalar(1) / (xs[i] - xs[i - level]));
  MultiPoly v = MultiPoly::variable(arity, other);
  MultiPoly acc = table[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    acc = acc * (v - MultiPoly::constant(arity, xs[i])) + table[i];
  return acc;
}

}  // namespace

MultiPoly canonical_associate(const MultiPoly& p) {
  if (p.is_zero()) return p;
  if (p.field() != nullptr) return p.scaled(p.leading_coef().inverse());
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) {
    const Rational c = t.coef.to_rational();
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(p.leading_coef().to_rational()) < 0) factor = -factor;
  return factor == 1 ? p : p.scaled(Scalar(factor));
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  require_same_arity(f, g);
  if (g.is_zero()) throw ValidationError("division by the zero polynomial");
  if (g.size() == 1) {
    const Term& d = g.leading_term();
    std::vector<Term> out;
    out.reserve(f.size());
    const Scalar inv = d.coef.inverse();
    for (const auto& t : f.terms()) {
      if (!key_divides(d.key, t.key)) return std::nullopt;
      out.push_back(Term{t.key - d.key, t.coef * inv});
    }
    return MultiPoly::from_terms(f.arity(), std::move(out));
  }
  MultiPoly rem = f;
  std::vector<Term> quotient;
  const Term& lead = g.leading_term();
  const Scalar inv = lead.coef.inverse();
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!key_divides(lead.key, t.key)) return std::nullopt;
    Term q{t.key - lead.key, t.coef * inv};
    rem -= g.shifted(q.key).scaled(q.coef);
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(f.arity(), std::move(quotient));
}

MultiPoly gcd_poly(const MultiPoly& f, const MultiPoly& g) {
  const std::array<MultiPoly, 2> both{f, g};
  return gcd_many(both);
}

MultiPoly gcd_many(std::span<const MultiPoly> polys) {
  if (polys.empty()) throw ValidationError("gcd of an empty list");
  const int arity = polys[0].arity();
  for (const auto& p : polys)
    if (p.arity() != arity) throw ValidationError("polynomials have different arities");
  common_field(polys);

  std::vector<MultiPoly> nonzero;
  for (const auto& p : polys)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return MultiPoly(arity);
  if (nonzero.size() == 1) return canonical_associate(nonzero[0]);

  // Common monomial factor first.
  std::array<unsigned, 3> low{0xFFFFU, 0xFFFFU, 0xFFFFU};
  for (const auto& p : nonzero)
    for (int v = 0; v < arity; ++v) low[v] = std::min(low[v], static_cast<unsigned>(p.low_degree_in(v)));
  for (int v = arity; v < 3; ++v) low[v] = 0;
  const MultiPoly mono = MultiPoly::monomial(arity, low, Scalar(1));
  const MonomialKey mono_key = mono.leading_term().key;
  std::vector<MultiPoly> rest;
  for (const auto& p : nonzero) {
    MultiPoly q = p;
    if (mono_key != 0) {
      std::vector<Term> terms = p.terms();
      for (auto& t : terms) t.key -= mono_key;
      q = MultiPoly::from_terms(arity, std::move(terms));
    }
    if (q.is_constant()) return mono;
    rest.push_back(std::move(q));
  }
  if (certified_coprime(rest)) return mono;

  MultiPoly g = rest[0];
  for (std::size_t i = 1; i < rest.size(); ++i) {
    g = gcd_general(g, rest[i]);
    if (g.is_constant()) return mono;
  }
  return canonical_associate(mono * g);
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  require_same_arity(f, g);
  if (var < 0 || var >= f.arity()) throw ValidationError("resultant variable out of range");
  if (f.degree_in(var) <= 0 && g.degree_in(var) <= 0)
    throw ValidationError("resultant variable occurs in neither polynomial");
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.arity());
  common_field(std::array<MultiPoly, 2>{f, g});
  return resultant_rec(f, g, var);
}

MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images) {
  if (static_cast<int>(images.size()) != f.arity())
    throw ValidationError("substitution needs one image per variable");
  const int out_arity = images[0].arity();
  for (const auto& im : images)
    if (im.arity() != out_arity) throw ValidationError("substitution images have different arities");
  std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(f.arity()));
  return substitute_rec(f, 0, images, powers, out_arity);
}

PolyFactorization factor_univariate(const MultiPoly& f) {
  if (f.arity() != 1) throw ValidationError("factor_univariate expects a univariate polynomial");
  if (f.is_zero()) throw ValidationError("cannot factor the zero polynomial");
  QPoly q(static_cast<std::size_t>(f.total_degree() + 1), Rational(0));
  for (const auto& t : f.terms()) q[t.exponent(0)] = t.coef.to_rational();
  const auto fac = folia::factor_univariate(q);
  PolyFactorization out;
  out.content = fac.content;
  for (const auto& [p, m] : fac.factors) {
    std::vector<Scalar> coeffs(p.begin(), p.end());
    out.factors.emplace_back(MultiPoly::from_dense(1, 0, coeffs), m);
  }
  return out;
}

}  // namespace folia
