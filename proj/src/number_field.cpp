#include "folia/number_field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "folia/dense.hpp"
#include "folia/factor.hpp"
#include "folia/multipoly.hpp"

namespace folia {

namespace {

using QPoly = dense::Poly<Rational>;

std::string qpoly_to_string(const QPoly& p) {
  MultiPoly m(1);
  for (std::size_t i = 0; i < p.size(); ++i)
    m += MultiPoly::monomial(1, {static_cast<unsigned>(i), 0, 0}, Scalar(p[i]));
  return to_string(m, {"t"});
}

struct Registry {
  std::mutex mutex;
  std::map<QPoly, std::unique_ptr<NumberField>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

const NumberField* extend_field(const std::vector<Rational>& minpoly) {
  QPoly p = minpoly;
  dense::trim(p);
  if (dense::degree(p) < 2)
    throw ValidationError("minimal polynomial must have degree >= 2: " + qpoly_to_string(p));
  if (p.back() != 1) throw ValidationError("minimal polynomial is not monic: " + qpoly_to_string(p));

  Registry& reg = registry();
  {
    std::lock_guard lock(reg.mutex);
    if (auto it = reg.fields.find(p); it != reg.fields.end()) return it->second.get();
  }

  const auto fac = factor_univariate(p);
  if (fac.factors.size() != 1 || fac.factors.front().second != 1) {
    const QPoly& f = fac.factors.front().first;
    throw ReducibleMinimalPolynomial(
        "minimal polynomial " + qpoly_to_string(p) + " is reducible, factor " + qpoly_to_string(f), f);
  }

  std::lock_guard lock(reg.mutex);
  auto& slot = reg.fields[p];
  if (!slot) slot.reset(new NumberField(p));
  return slot.get();
}

const NumberField* extend_field(const MultiPoly& minpoly) {
  if (minpoly.arity() != 1) throw ValidationError("minimal polynomial must be univariate");
  QPoly p(static_cast<std::size_t>(std::max(minpoly.total_degree() + 1, 0)), Rational(0));
  for (const auto& term : minpoly.terms()) p[term.exponent(0)] = term.coef.to_rational();
  return extend_field(p);
}

Scalar Scalar::in_field(FieldHandle field, std::vector<Rational> coords) {
  Scalar s;
  if (field == nullptr) {
    s.q_ = coords.empty() ? Rational(0) : coords.front();
    return s;
  }
  const auto& p = field->minpoly();
  const int d = field->degree();
  QPoly c = std::move(coords);
  dense::trim(c);
  if (dense::degree(c) >= d) c = dense::rem(c, p);
  c.resize(d, Rational(0));
  s.field_ = field;
  s.v_ = std::move(c);
  return s;
}

Scalar Scalar::generator(FieldHandle field) {
  if (field == nullptr) throw ValidationError("the rationals have no generator");
  return in_field(field, {Rational(0), Rational(1)});
}

bool Scalar::is_zero() const {
  if (field_ == nullptr) return sgn(q_) == 0;
  for (const auto& c : v_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  if (field_ == nullptr) return true;
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (sgn(v_[i]) != 0) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && to_rational() == 1; }

Rational Scalar::to_rational() const {
  if (field_ == nullptr) return q_;
  if (!is_rational()) throw ValidationError("scalar " + to_string(*this) + " is not rational");
  return v_.front();
}

std::vector<Rational> Scalar::coords() const {
  if (field_ == nullptr) return {q_};
  return v_;
}

FieldHandle Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return a.field_;
  if (a.field_ == nullptr) return b.field_;
  if (b.field_ == nullptr) return a.field_;
  throw FieldMismatch();
}

std::vector<Rational> Scalar::padded(FieldHandle f) const {
  if (field_ != nullptr) return v_;
  std::vector<Rational> c(static_cast<std::size_t>(f->degree()), Rational(0));
  c[0] = q_;
  return c;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_ == nullptr) {
    r.q_ = -q_;
  } else {
    for (auto& c : r.v_) c = -c;
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.field_ == nullptr && b.field_ == nullptr) {
    Scalar r;
    r.q_ = a.q_ + b.q_;
    return r;
  }
  const FieldHandle f = Scalar::common_field(a, b);
  auto c = a.padded(f);
  const auto d = b.padded(f);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
  Scalar r;
  r.field_ = f;
  r.v_ = std::move(c);
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.field_ == nullptr && b.field_ == nullptr) {
    Scalar r;
    r.q_ = a.q_ - b.q_;
    return r;
  }
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.field_ == nullptr && b.field_ == nullptr) {
    Scalar r;
    r.q_ = a.q_ * b.q_;
    return r;
  }
  const FieldHandle f = Scalar::common_field(a, b);
  if (a.field_ == nullptr || b.field_ == nullptr) {
    const Scalar& ext = a.field_ == nullptr ? b : a;
    const Rational& k = a.field_ == nullptr ? a.q_ : b.q_;
    Scalar r = ext;
    for (auto& c : r.v_) c *= k;
    return r;
  }
  return Scalar::in_field(f, dense::mul(a.v_, b.v_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ValidationError("division by zero");
  if (field_ == nullptr) {
    Scalar r;
    r.q_ = 1 / q_;
    return r;
  }
  QPoly a = v_;
  dense::trim(a);
  auto [g, s, t] = dense::extended_gcd(a, field_->minpoly());
  (void)t;
  if (dense::degree(g) != 0) throw InvariantBreach("non-invertible element in a field extension");
  return in_field(field_, s);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.field_ == nullptr && b.field_ == nullptr) {
    if (sgn(b.q_) == 0) throw ValidationError("division by zero");
    Scalar r;
    r.q_ = a.q_ / b.q_;
    return r;
  }
  return a * b.inverse();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ == nullptr && b.field_ == nullptr) return a.q_ == b.q_;
  const FieldHandle f = Scalar::common_field(a, b);
  return a.padded(f) == b.padded(f);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.field_ == nullptr && b.field_ == nullptr) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const FieldHandle f = Scalar::common_field(a, b);
  const auto x = a.padded(f);
  const auto y = b.padded(f);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Scalar& s, const std::string& generator) {
  if (s.is_rational()) return to_string(s.to_rational());
  const auto c = s.coords();
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (sgn(c[i]) == 0) continue;
    Rational mag = abs(c[i]);
    if (out.empty()) {
      if (sgn(c[i]) < 0) out += "-";
    } else {
      out += sgn(c[i]) < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += generator;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace folia
