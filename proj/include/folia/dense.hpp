#pragma once

// Dense univariate polynomials over an exact field, stored low degree first.
// Used for field arithmetic, univariate gcds and resultants; the element type
// only needs ring operators, division and an is_zero overload.

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

namespace folia::dense {

template <class T>
using Poly = std::vector<T>;

template <class T>
void trim(Poly<T>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class T>
int degree(const Poly<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  trim(r);
  return r;
}

template <class T>
Poly<T> sub(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class T>
Poly<T> scale(Poly<T> p, const T& c) {
  for (auto& x : p) x = x * c;
  trim(p);
  return p;
}

/// Quotient and remainder; b must be nonzero.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(Poly<T> a, const Poly<T>& b) {
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {{}, std::move(a)};
  Poly<T> q(a.size() - b.size() + 1, T(0));
  const T inv = T(1) / b.back();
  for (int k = degree(a); k >= db; --k) {
    if (is_zero(a[k])) continue;
    T c = a[k] * inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) a[k - db + j] = a[k - db + j] - c * b[j];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

template <class T>
Poly<T> rem(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

template <class T>
Poly<T> monic(Poly<T> p) {
  trim(p);
  if (p.empty()) return p;
  const T inv = T(1) / p.back();
  for (auto& x : p) x = x * inv;
  return p;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> extended_gcd(Poly<T> a, Poly<T> b) {
  trim(a);
  trim(b);
  Poly<T> s0{T(1)}, s1{}, t0{}, t1{T(1)};
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    Poly<T> s2 = sub(s0, mul(q, s1));
    Poly<T> t2 = sub(t0, mul(q, t1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  const T inv = T(1) / a.back();
  return {scale(a, inv), scale(s0, inv), scale(t0, inv)};
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.size() <= 1) return {};
  Poly<T> d(p.size() - 1, T(0));
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * T(static_cast<long>(i));
  trim(d);
  return d;
}

template <class T>
T evaluate(const Poly<T>& p, const T& x) {
  T acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Sylvester resultant with respect to the actual degrees, via the Euclidean
/// recurrence Res(f, g) = (-1)^(mn) lc(g)^(m - deg r) Res(g, f mod g).
template <class T>
T resultant(Poly<T> f, Poly<T> g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return T(0);
  T acc(1);
  while (true) {
    const int m = degree(f);
    const int n = degree(g);
    if (n == 0) {
      T p(1);
      for (int i = 0; i < m; ++i) p = p * g[0];
      return acc * p;
    }
    if (m < n) {
      if ((m * n) % 2 == 1) acc = -acc;
      std::swap(f, g);
      continue;
    }
    Poly<T> r = rem(f, g);
    if (r.empty()) return T(0);
    const int k = degree(r);
    if ((m * n) % 2 == 1) acc = -acc;
    for (int i = 0; i < m - k; ++i) acc = acc * g.back();
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace folia::dense
