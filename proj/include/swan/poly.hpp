#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "swan/error.hpp"
#include "swan/fq.hpp"

namespace swan {

/* Sparse multivariate polynomials.  Slots 0..8 hold u1..u9; slot 9 is
 * reserved for the unramified generator in characteristic-zero lifts. */
constexpr int kMaxVars = 10;
constexpr int kLiftGenSlot = 9;

struct Mono {
  std::array<uint16_t, kMaxVars> e{};

  bool operator==(const Mono& o) const { return e == o.e; }
  // lex with u1 > u2 > ... ; higher monomial sorts first in term lists
  bool operator<(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] != o.e[i]) return e[i] < o.e[i];
    return false;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  long total_degree() const {
    long d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool divisible_by(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < o.e[i]) return false;
    return true;
  }
  Mono operator*(const Mono& o) const {
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = (uint16_t)(e[i] + o.e[i]);
    return m;
  }
  Mono operator/(const Mono& o) const {
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = (uint16_t)(e[i] - o.e[i]);
    return m;
  }
  static Mono var(int i, int exp = 1) {
    Mono m;
    m.e[i] = (uint16_t)exp;
    return m;
  }
};

template <class C>
bool coeff_is_zero(const C& c) {
  return c.is_zero();
}

template <class C>
struct Poly {
  struct Term {
    Mono m;
    C c;
  };
  // sorted by monomial, descending; no zero coefficients
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].m.is_one()); }
  size_t nterms() const { return t.size(); }

  const Term& leading() const { return t.front(); }

  int deg_in(int var) const {
    int d = -1;
    for (auto& tm : t) d = std::max(d, (int)tm.m.e[var]);
    return d;
  }
  bool uses_var(int var) const {
    for (auto& tm : t)
      if (tm.m.e[var]) return true;
    return false;
  }
  int top_var() const {  // highest slot index appearing, or -1
    int v = -1;
    for (auto& tm : t)
      for (int i = kMaxVars - 1; i > v; --i)
        if (tm.m.e[i]) v = i;
    return v;
  }

  void normalize() {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return b.m < a.m; });
    std::vector<Term> out;
    out.reserve(t.size());
    for (auto& tm : t) {
      if (!out.empty() && out.back().m == tm.m)
        out.back().c = out.back().c + tm.c;
      else
        out.push_back(tm);
      if (!out.empty() && coeff_is_zero(out.back().c)) out.pop_back();
    }
    t = std::move(out);
  }

  static Poly zero() { return Poly{}; }
  static Poly constant(const C& c) {
    Poly f;
    if (!coeff_is_zero(c)) f.t.push_back({Mono{}, c});
    return f;
  }
  static Poly monomial(const Mono& m, const C& c) {
    Poly f;
    if (!coeff_is_zero(c)) f.t.push_back({m, c});
    return f;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
      if (!(a.t[i].m == b.t[i].m) || !(a.t[i].c == b.t[i].c)) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
      if (j == b.t.size() || (i < a.t.size() && b.t[j].m < a.t[i].m)) {
        out.t.push_back(a.t[i++]);
      } else if (i == a.t.size() || a.t[i].m < b.t[j].m) {
        out.t.push_back(b.t[j++]);
      } else {
        C c = a.t[i].c + b.t[j].c;
        if (!coeff_is_zero(c)) out.t.push_back({a.t[i].m, c});
        ++i, ++j;
      }
    }
    return out;
  }
  friend Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& tm : out.t) tm.c = -tm.c;
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly out;
    out.t.reserve(a.t.size() * b.t.size());
    for (auto& ta : a.t)
      for (auto& tb : b.t) out.t.push_back({ta.m * tb.m, ta.c * tb.c});
    out.normalize();
    return out;
  }

  Poly scaled(const C& c) const {
    Poly out;
    if (coeff_is_zero(c)) return out;
    out.t.reserve(t.size());
    for (auto& tm : t) {
      C cc = tm.c * c;
      if (!coeff_is_zero(cc)) out.t.push_back({tm.m, cc});
    }
    return out;
  }

  Poly shifted(const Mono& m) const {
    Poly out = *this;
    for (auto& tm : out.t) tm.m = tm.m * m;
    return out;
  }

  Poly pow(long e) const {
    Poly acc = constant_one_like(*this);
    Poly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // coefficient of var^d, as a polynomial in the remaining variables
  Poly coeff_of(int var, int d) const {
    Poly out;
    for (auto& tm : t)
      if (tm.m.e[var] == d) {
        Mono m = tm.m;
        m.e[var] = 0;
        out.t.push_back({m, tm.c});
      }
    out.normalize();
    return out;
  }

 private:
  static Poly constant_one_like(const Poly& f);
};

// --- coefficient-specific hooks ---------------------------------------

template <>
inline Poly<Fq> Poly<Fq>::constant_one_like(const Poly<Fq>& f) {
  if (f.is_zero()) fail(errc::bad_input, "pow of zero-context polynomial");
  return Poly<Fq>::constant(fq_one(f.t[0].c.k));
}

using FqPoly = Poly<Fq>;

inline const FieldCtx* poly_ctx(const FqPoly& f) { return f.is_zero() ? nullptr : f.t[0].c.k; }

inline FqPoly fqpoly_one(const FieldCtx* k) { return FqPoly::constant(fq_one(k)); }

// exact division; nullopt if not divisible
std::optional<FqPoly> fqpoly_try_divide(const FqPoly& a, const FqPoly& b);

// gcd of multivariate polynomials over F_q, normalized monic (lex order)
FqPoly fqpoly_gcd(FqPoly a, FqPoly b);

// Frobenius power f -> f^p computed termwise (exponents *p, coefficients^p)
inline FqPoly fqpoly_frob(const FqPoly& f, int p) {
  FqPoly out;
  out.t.reserve(f.t.size());
  for (auto& tm : f.t) {
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = (uint16_t)(tm.m.e[i] * p);
    out.t.push_back({m, fq_frob(tm.c)});
  }
  return out;  // order preserved: m -> m^p is monotone for lex
}

inline FqPoly fqpoly_monic(FqPoly f) {
  if (f.is_zero()) return f;
  Fq lead = f.t[0].c;
  if (lead.is_one()) return f;
  return f.scaled(fq_inv(lead));
}

inline FqPoly fqpoly_dvar(const FqPoly& f, int var) {
  FqPoly out;
  for (auto& tm : f.t) {
    int e = tm.m.e[var];
    if (!e) continue;
    Fq c = tm.c * Fq(tm.c.k, tm.c.k->from_int(e));
    if (c.is_zero()) continue;
    Mono m = tm.m;
    m.e[var] = (uint16_t)(e - 1);
    out.t.push_back({m, c});
  }
  out.normalize();
  return out;
}

}  // namespace swan
