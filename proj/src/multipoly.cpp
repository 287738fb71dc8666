#include "folia/multipoly.hpp"

#include <algorithm>
#include <unordered_map>

namespace folia {

namespace {

constexpr unsigned kMaxExponent = 0xFFFFU;

unsigned key_exponent(MonomialKey k, int var) {
  return static_cast<unsigned>((k >> (32 - 16 * var)) & 0xFFFFU);
}

void sort_and_merge(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    MonomialKey k = terms[i].key;
    Scalar c = std::move(terms[i].coef);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].key == k; ++j) c += terms[j].coef;
    if (!c.is_zero()) terms[out++] = Term{k, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

}  // namespace

MonomialKey make_key(unsigned e0, unsigned e1, unsigned e2) {
  const unsigned d = e0 + e1 + e2;
  if (d > kMaxExponent) throw AlgorithmAbort("monomial degree exceeds the supported range");
  return (static_cast<MonomialKey>(d) << 48) | (static_cast<MonomialKey>(e0) << 32) |
         (static_cast<MonomialKey>(e1) << 16) | static_cast<MonomialKey>(e2);
}

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity < 1 || arity > 3) throw ValidationError("polynomial arity must be 1, 2 or 3");
}

MultiPoly MultiPoly::constant(int arity, const Scalar& c) {
  MultiPoly p(arity);
  if (!c.is_zero()) p.terms_.push_back(Term{0, c});
  p.refresh();
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw ValidationError("variable index out of range");
  std::array<unsigned, 3> e{0, 0, 0};
  e[index] = 1;
  return monomial(arity, e, Scalar(1));
}

MultiPoly MultiPoly::monomial(int arity, std::array<unsigned, 3> exps, const Scalar& c) {
  for (int i = arity; i < 3; ++i)
    if (exps[i] != 0) throw ValidationError("exponent on a variable outside the arity");
  MultiPoly p(arity);
  if (!c.is_zero()) p.terms_.push_back(Term{make_key(exps[0], exps[1], exps[2]), c});
  p.refresh();
  return p;
}

MultiPoly MultiPoly::from_terms(int arity, std::vector<Term> terms) {
  MultiPoly p(arity);
  sort_and_merge(terms);
  p.terms_ = std::move(terms);
  p.refresh();
  return p;
}

void MultiPoly::refresh() {
  if (terms_.empty()) {
    total_degree_ = -1;
    homogeneous_ = true;
    return;
  }
  total_degree_ = static_cast<int>(terms_.front().degree());
  homogeneous_ = terms_.back().degree() == terms_.front().degree();
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exponent(var)));
  return d;
}

int MultiPoly::low_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = static_cast<int>(kMaxExponent);
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.exponent(var)));
  return d;
}

Scalar MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coef;
  return Scalar(0);
}

Scalar MultiPoly::coefficient(MonomialKey key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, MonomialKey k) { return t.key > k; });
  if (it != terms_.end() && it->key == key) return it->coef;
  return Scalar(0);
}

FieldHandle MultiPoly::field() const {
  for (const auto& t : terms_)
    if (t.coef.field() != nullptr) return t.coef.field();
  return nullptr;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw ValidationError("arity mismatch in polynomial sum");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key > o.terms_[j].key)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].key > terms_[i].key) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].coef + o.terms_[j].coef;
      if (!c.is_zero()) out.push_back(Term{terms_[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  refresh();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw ValidationError("arity mismatch in polynomial product");
  MultiPoly r(a.arity_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.total_degree_ + b.total_degree_ > static_cast<int>(kMaxExponent))
    throw AlgorithmAbort("polynomial degree exceeds the supported range");
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const MultiPoly& mono = a.terms_.size() == 1 ? a : b;
    const MultiPoly& other = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_)
      r.terms_.push_back(Term{t.key + mono.terms_[0].key, t.coef * mono.terms_[0].coef});
    r.refresh();
    return r;
  }
  std::unordered_map<MonomialKey, Scalar> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.key + t.key, s.coef * t.coef);
      if (!inserted) it->second += s.coef * t.coef;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!c.is_zero()) terms.push_back(Term{k, std::move(c)});
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
  r.terms_ = std::move(terms);
  r.refresh();
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(arity_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  r.refresh();
  return r;
}

MultiPoly MultiPoly::shifted(MonomialKey key) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.key += key;
  r.refresh();
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(arity_, Scalar(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int var) const {
  std::vector<Term> out;
  const MonomialKey unit = var == 0 ? make_key(1) : (var == 1 ? make_key(0, 1) : make_key(0, 0, 1));
  for (const auto& t : terms_) {
    const unsigned e = t.exponent(var);
    if (e == 0) continue;
    out.push_back(Term{t.key - unit, t.coef * Scalar(static_cast<long>(e))});
  }
  MultiPoly r(arity_);
  r.terms_ = std::move(out);  // order is preserved by removing one unit of var
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
  r.refresh();
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
  const int d = degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& t : terms_) {
    const unsigned e = t.exponent(var);
    std::array<unsigned, 3> ex{key_exponent(t.key, 0), key_exponent(t.key, 1), key_exponent(t.key, 2)};
    ex[var] = 0;
    buckets[e].push_back(Term{make_key(ex[0], ex[1], ex[2]), t.coef});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(arity_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::from_coefficients_in(int arity, int var, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms_) {
      if (t.exponent(var) != 0) throw ValidationError("coefficient involves the main variable");
      std::array<unsigned, 3> ex{t.exponent(0), t.exponent(1), t.exponent(2)};
      ex[var] = static_cast<unsigned>(k);
      terms.push_back(Term{make_key(ex[0], ex[1], ex[2]), t.coef});
    }
  }
  return from_terms(arity, std::move(terms));
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly r(arity_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.degree()) == degree) r.terms_.push_back(t);
  r.refresh();
  return r;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != arity_) throw ValidationError("evaluation point has wrong arity");
  std::array<std::vector<Scalar>, 3> powers;
  for (int v = 0; v < arity_; ++v) {
    const int d = degree_in(v);
    powers[v].reserve(static_cast<std::size_t>(std::max(d + 1, 1)));
    powers[v].push_back(Scalar(1));
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  Scalar acc(0);
  for (const auto& t : terms_) {
    Scalar m = t.coef;
    for (int v = 0; v < arity_; ++v) {
      const unsigned e = t.exponent(v);
      if (e != 0) m *= powers[v][e];
    }
    acc += m;
  }
  return acc;
}

MultiPoly MultiPoly::partial_evaluate(int var, const Scalar& value) const {
  const int d = degree_in(var);
  std::vector<Scalar> powers{Scalar(1)};
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.exponent(var);
    std::array<unsigned, 3> ex{t.exponent(0), t.exponent(1), t.exponent(2)};
    ex[var] = 0;
    out.push_back(Term{make_key(ex[0], ex[1], ex[2]), e == 0 ? t.coef : t.coef * powers[e]});
  }
  return from_terms(arity_, std::move(out));
}

std::vector<Scalar> MultiPoly::to_dense(int var) const {
  std::vector<Scalar> out(static_cast<std::size_t>(std::max(degree_in(var) + 1, 0)), Scalar(0));
  for (const auto& t : terms_) {
    if (t.degree() != t.exponent(var)) throw ValidationError("polynomial is not univariate in the requested variable");
    out[t.exponent(var)] = t.coef;
  }
  return out;
}

MultiPoly MultiPoly::from_dense(int arity, int var, const std::vector<Scalar>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::array<unsigned, 3> ex{0, 0, 0};
    ex[var] = static_cast<unsigned>(k);
    terms.push_back(Term{make_key(ex[0], ex[1], ex[2]), coeffs[k]});
  }
  return from_terms(arity, std::move(terms));
}

MultiPoly MultiPoly::reembed(int new_arity, std::span<const int> positions) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::array<unsigned, 3> ex{0, 0, 0};
    unsigned kept = 0;
    for (int v = 0; v < arity_; ++v) {
      const unsigned e = t.exponent(v);
      const int pos = v < static_cast<int>(positions.size()) ? positions[v] : -1;
      if (pos < 0) {
        if (e != 0) throw ValidationError("re-embedding drops a variable that occurs");
        continue;
      }
      ex[pos] += e;
      kept += e;
    }
    (void)kept;
    out.push_back(Term{make_key(ex[0], ex[1], ex[2]), t.coef});
  }
  return from_terms(new_arity, std::move(out));
}

std::vector<std::string> default_variable_names(int arity) {
  switch (arity) {
    case 1:
      return {"t"};
    case 2:
      return {"u", "v"};
    default:
      return {"x", "y", "z"};
  }
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names_in) {
  const auto names = names_in.empty() ? default_variable_names(p.arity()) : names_in;
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (int v = 0; v < p.arity(); ++v) {
      const unsigned e = t.exponent(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string coef;
    bool negative = false;
    if (t.coef.is_rational()) {
      Rational c = t.coef.to_rational();
      negative = sgn(c) < 0;
      const Rational mag = abs(c);
      if (mono.empty() || mag != 1) coef = to_string(mag);
    } else {
      coef = "(" + to_string(t.coef) + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coef;
    if (!coef.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

}  // namespace folia
