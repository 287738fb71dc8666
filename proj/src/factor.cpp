#include "folia/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "folia/dense.hpp"
#include "folia/errors.hpp"

namespace folia {

namespace {

using ZPoly = std::vector<Integer>;    // low degree first
using ModPoly = std::vector<std::int64_t>;

// ---------------------------------------------------------------- mod p ----

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mod_pow(std::int64_t a, std::uint64_t e, std::int64_t p) {
  __int128 result = 1;
  __int128 base = mod_norm(a, p);
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) { return mod_pow(a, static_cast<std::uint64_t>(p - 2), p); }

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<__int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<__int128>(a[i]) * b[j];
  }
  ModPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::int64_t>(acc[i] % p);
  mtrim(r);
  return r;
}

ModPoly msub(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_norm(r[i] - b[i], p);
  mtrim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mdivmod(ModPoly a, const ModPoly& b, std::int64_t p) {
  mtrim(a);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  ModPoly q(a.size() - b.size() + 1, 0);
  const std::int64_t inv = mod_inv(b.back(), p);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    if (a[k] == 0) continue;
    const std::int64_t c = static_cast<std::int64_t>(static_cast<__int128>(a[k]) * inv % p);
    q[k - db] = c;
    for (int j = 0; j <= db; ++j)
      a[k - db + j] = mod_norm(static_cast<std::int64_t>((a[k - db + j] - static_cast<__int128>(c) * b[j]) % p), p);
  }
  a.resize(db);
  mtrim(a);
  mtrim(q);
  return {q, a};
}

ModPoly mmonic(ModPoly a, std::int64_t p) {
  mtrim(a);
  if (a.empty()) return a;
  const std::int64_t inv = mod_inv(a.back(), p);
  for (auto& c : a) c = static_cast<std::int64_t>(static_cast<__int128>(c) * inv % p);
  return a;
}

ModPoly mgcd(ModPoly a, ModPoly b, std::int64_t p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    auto r = mdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

/// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mext_gcd(ModPoly a, ModPoly b, std::int64_t p) {
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    auto [q, r] = mdivmod(a, b, p);
    ModPoly s2 = msub(s0, mmul(q, s1, p), p);
    ModPoly t2 = msub(t0, mmul(q, t1, p), p);
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::int64_t inv = mod_inv(a.back(), p);
  for (auto& c : s0) c = static_cast<std::int64_t>(static_cast<__int128>(c) * inv % p);
  for (auto& c : t0) c = static_cast<std::int64_t>(static_cast<__int128>(c) * inv % p);
  return {s0, t0};
}

ModPoly mderiv(const ModPoly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    d[i - 1] = static_cast<std::int64_t>(static_cast<__int128>(a[i]) * static_cast<std::int64_t>(i % p) % p);
  mtrim(d);
  return d;
}

ModPoly mpowmod(ModPoly base, const Integer& e, const ModPoly& modulus, std::int64_t p) {
  ModPoly result{1};
  base = mdivmod(base, modulus, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mdivmod(mmul(result, result, p), modulus, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mdivmod(mmul(result, base, p), modulus, p).second;
  }
  return result;
}

ModPoly reduce_mod(const ZPoly& f, std::int64_t p) {
  ModPoly r(f.size());
  const Integer pp(static_cast<long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c = f[i] % pp;
    if (c < 0) c += pp;
    r[i] = c.get_si();
  }
  mtrim(r);
  return r;
}

/// Monic irreducible factors of a monic squarefree polynomial mod an odd prime.
std::vector<ModPoly> factor_mod_p(const ModPoly& f, std::int64_t p, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> by_degree;
  ModPoly rest = f;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer pz(static_cast<long>(p));
  for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
    h = mpowmod(h, pz, rest, p);
    ModPoly g = mgcd(msub(h, x, p), rest, p);
    if (g.size() > 1) {
      by_degree.emplace_back(g, d);
      rest = mdivmod(rest, g, p).first;
      h = mdivmod(h, rest, p).second;
    }
  }
  if (rest.size() > 1) by_degree.emplace_back(rest, static_cast<int>(rest.size()) - 1);

  std::vector<ModPoly> out;
  std::uniform_int_distribution<std::int64_t> coin(0, p - 1);
  for (auto& [g, d] : by_degree) {
    std::vector<ModPoly> pending{g};
    while (!pending.empty()) {
      ModPoly u = std::move(pending.back());
      pending.pop_back();
      if (static_cast<int>(u.size()) - 1 == d) {
        out.push_back(std::move(u));
        continue;
      }
      Integer e;
      mpz_pow_ui(e.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      while (true) {
        ModPoly a(u.size() - 1);
        for (auto& c : a) c = coin(rng);
        mtrim(a);
        if (a.size() <= 1) continue;
        ModPoly b = msub(mpowmod(a, e, u, p), ModPoly{1}, p);
        ModPoly g2 = mgcd(b, u, p);
        if (g2.size() > 1 && g2.size() < u.size()) {
          pending.push_back(mdivmod(u, g2, p).first);
          pending.push_back(std::move(g2));
          break;
        }
      }
    }
  }
  return out;
}

// ----------------------------------------------------------- over Z/p^k ----

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zmod(std::move(r), m);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zmod(std::move(r), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zmod(std::move(r), m);
}

/// Division by a monic divisor modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  a = zmod(std::move(a), m);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    Integer c = a[k] % m;
    if (c < 0) c += m;
    if (c == 0) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) {
      a[k - db + j] -= c * b[j];
      a[k - db + j] %= m;
    }
  }
  a.resize(db);
  return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

ZPoly lift_from(const ModPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

/// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic;
/// returns the same relations modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  const Integer m2 = m * m;
  const ZPoly e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
  ZPoly g_new = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
  ZPoly h_new = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, g_new, m2), zmul(t, h_new, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = zdivmod_monic(zmul(s, b, m2), h_new, m2);
  s = zsub(s, d, m2);
  t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g_new, m2), m2), m2);
  g = std::move(g_new);
  h = std::move(h_new);
}

/// Lifts f = lc(f) * prod(factors) mod p to the same relation mod modulus
/// (a power of p); returns the lifted monic factors.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, std::int64_t p,
                               const Integer& modulus) {
  if (factors.size() == 1) {
    ZPoly g = zmod(f, modulus);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), g.back().get_mpz_t(), modulus.get_mpz_t());
    for (auto& c : g) c *= inv;
    return {zmod(std::move(g), modulus)};
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());

  ModPoly g0{reduce_mod(ZPoly{f.back()}, p)};
  for (const auto& u : left) g0 = mmul(g0, u, p);
  ModPoly h0{1};
  for (const auto& u : right) h0 = mmul(h0, u, p);
  auto [s0, t0] = mext_gcd(g0, h0, p);

  ZPoly g = lift_from(g0), h = lift_from(h0), s = lift_from(s0), t = lift_from(t0);
  Integer m(static_cast<long>(p));
  while (m < modulus) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  g = zmod(std::move(g), modulus);
  h = zmod(std::move(h), modulus);
  auto lifted = hensel_lift(g, left, p, modulus);
  auto rest = hensel_lift(h, right, p, modulus);
  lifted.insert(lifted.end(), rest.begin(), rest.end());
  return lifted;
}

// ----------------------------------------------------------- over Z/Q ----

ZPoly primitive_integer(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f) den = lcm(den, c.get_den());
  ZPoly z;
  z.reserve(f.size());
  for (const auto& c : f) z.push_back(c.get_num() * (den / c.get_den()));
  Integer g = 0;
  for (const auto& c : z) g = gcd(g, c);
  if (g == 0) return {};
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

QPoly to_q(const ZPoly& z) {
  QPoly q;
  q.reserve(z.size());
  for (const auto& c : z) q.emplace_back(c);
  return q;
}

std::optional<ZPoly> zdivide_exact(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = dense::divmod(to_q(a), to_q(b));
  if (!r.empty()) return std::nullopt;
  ZPoly out;
  for (const auto& c : q) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Irreducible integer factors of a primitive squarefree polynomial with
/// positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  std::mt19937_64 rng(0x5eed1234ULL);
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (std::int64_t p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime_small(p)) continue;
    ModPoly fp = reduce_mod(f, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (mgcd(fp, mderiv(fp, p), p).size() != 1) continue;
    ++tried;
    auto facs = factor_mod_p(mmonic(fp, p), p, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw AlgorithmAbort("no suitable prime for modular factorization");
  if (best.size() > 40) throw AlgorithmAbort("too many modular factors for recombination search");

  // Coefficients of lc(f)/lc(h) * h for a true factor h are bounded by
  // |lc| * 2^n * ||f||_2; the modulus must exceed twice that.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound *= 2;
  Integer modulus(static_cast<long>(best_p));
  while (modulus <= bound) modulus *= best_p;
  const Integer half_mod = modulus / 2;

  auto lifted = hensel_lift(f, best, best_p, modulus);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t d = 1;
  while (2 * d <= lifted.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = zmul(cand, lifted[i], modulus);
      for (auto& c : cand)
        if (c > half_mod) c -= modulus;
      ztrim(cand);
      ZPoly h = primitive_integer(to_q(cand));
      if (h.size() > 1) {
        if (auto q = zdivide_exact(rest, h)) {
          found.push_back(h);
          rest = *q;
          for (std::size_t k = d; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
          progress = true;
          break;
        }
      }
      // next combination
      std::size_t k = d;
      while (k > 0 && idx[k - 1] == lifted.size() - d + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++d;
  }
  if (rest.size() > 1) found.push_back(primitive_integer(to_q(rest)));
  return found;
}

QPoly monic_q(const QPoly& p) { return dense::monic(p); }

}  // namespace

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f_in) {
  QPoly f = dense::monic(f_in);
  std::vector<std::pair<QPoly, int>> out;
  if (dense::degree(f) <= 0) return out;
  QPoly df = dense::derivative(f);
  QPoly a0 = dense::gcd(f, df);
  QPoly b = dense::divmod(f, a0).first;
  QPoly c = dense::divmod(df, a0).first;
  QPoly d = dense::sub(c, dense::derivative(b));
  int i = 1;
  while (dense::degree(b) > 0) {
    QPoly a = dense::gcd(b, d);
    if (dense::degree(a) > 0) out.emplace_back(a, i);
    b = dense::divmod(b, a).first;
    c = dense::divmod(d, a).first;
    d = dense::sub(c, dense::derivative(b));
    ++i;
  }
  return out;
}

UnivariateFactorization factor_univariate(const QPoly& f_in) {
  QPoly f = f_in;
  dense::trim(f);
  if (f.empty()) throw ValidationError("cannot factor the zero polynomial");
  UnivariateFactorization out;
  out.content = f.back();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : factor_squarefree(primitive_integer(part)))
      out.factors.emplace_back(monic_q(to_q(z)), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end());
  });
  return out;
}

std::vector<Rational> rational_roots(const QPoly& f) {
  std::vector<Rational> roots;
  for (const auto& [fac, mult] : factor_univariate(f).factors)
    if (fac.size() == 2) roots.push_back(-fac[0]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace folia
