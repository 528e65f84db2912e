#pragma once

#include <climits>
#include <map>
#include <vector>

#include "swan/poly.hpp"

namespace swan {

/* Element of k = F_q(u_1..u_r) in canonical form: gcd(num,den) = 1 and den
 * monic under the fixed lex order, so equality is structural. */
struct KElem {
  FqPoly num;  // zero iff the element is 0
  FqPoly den;  // nonzero; {1} for polynomials

  KElem() = default;
  KElem(FqPoly n, FqPoly d) : num(std::move(n)), den(std::move(d)) {}
  static KElem zero(const FieldCtx* k) { return KElem{FqPoly{}, fqpoly_one(k)}; }
  static KElem one(const FieldCtx* k) { return KElem{fqpoly_one(k), fqpoly_one(k)}; }
  static KElem from_int(const FieldCtx* k, long long n) {
    return KElem{FqPoly::constant(Fq(k, k->from_int(n))), fqpoly_one(k)};
  }
  static KElem from_fq(const Fq& c) { return KElem{FqPoly::constant(c), fqpoly_one(c.k)}; }
  static KElem var(const FieldCtx* k, int i) {  // u_{i+1}, slot i
    return KElem{FqPoly::monomial(Mono::var(i), fq_one(k)), fqpoly_one(k)};
  }
  static KElem gen(const FieldCtx* k) {  // F_q generator g (h > 1)
    return KElem{FqPoly::constant(Fq(k, k->p)), fqpoly_one(k)};
  }
  static KElem make(FqPoly n, FqPoly d) {
    KElem e{std::move(n), std::move(d)};
    e.reduce();
    return e;
  }

  const FieldCtx* ctx() const { return den.t[0].c.k; }
  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return den.is_constant() && num == den; }
  bool is_poly() const { return den.is_constant() && den.t[0].c.is_one(); }

  void reduce() {
    if (den.is_zero()) fail(errc::division_by_zero, "zero denominator");
    if (num.is_zero()) {
      den = fqpoly_one(den.t[0].c.k);
      return;
    }
    if (!(den.is_constant())) {
      FqPoly g = fqpoly_gcd(num, den);
      if (!g.is_constant()) {
        num = *fqpoly_try_divide(num, g);
        den = *fqpoly_try_divide(den, g);
      }
    }
    Fq lead = den.t[0].c;
    if (!lead.is_one()) {
      Fq li = fq_inv(lead);
      num = num.scaled(li);
      den = den.scaled(li);
    }
  }

  friend bool operator==(const KElem& a, const KElem& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const KElem& a, const KElem& b) { return !(a == b); }
  // arbitrary total order so KElem can key maps
  friend bool operator<(const KElem& a, const KElem& b) {
    auto cmp = [](const FqPoly& x, const FqPoly& y) -> int {
      if (x.t.size() != y.t.size()) return x.t.size() < y.t.size() ? -1 : 1;
      for (size_t i = 0; i < x.t.size(); ++i) {
        if (!(x.t[i].m == y.t[i].m)) return x.t[i].m < y.t[i].m ? -1 : 1;
        if (x.t[i].c.v != y.t[i].c.v) return x.t[i].c.v < y.t[i].c.v ? -1 : 1;
      }
      return 0;
    };
    int c = cmp(a.num, b.num);
    if (c) return c < 0;
    return cmp(a.den, b.den) < 0;
  }

  friend KElem operator+(const KElem& a, const KElem& b) {
    if (a.is_poly() && b.is_poly()) return KElem{a.num + b.num, a.den};
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend KElem operator-(const KElem& a) { return KElem{-a.num, a.den}; }
  friend KElem operator-(const KElem& a, const KElem& b) { return a + (-b); }
  friend KElem operator*(const KElem& a, const KElem& b) {
    if (a.is_poly() && b.is_poly()) return KElem{a.num * b.num, a.den};
    return make(a.num * b.num, a.den * b.den);
  }
  friend KElem operator/(const KElem& a, const KElem& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "division by zero in k");
    return make(a.num * b.den, a.den * b.num);
  }

  KElem pow(long e) const {
    if (e < 0) return one(ctx()) / pow(-e);
    KElem acc = one(ctx()), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool uses_var(int i) const { return num.uses_var(i) || den.uses_var(i); }
};

// x -> x^p (coordinate Frobenius on k)
inline KElem frobenius_k(const KElem& a) {
  const int p = a.ctx()->p;
  return KElem{fqpoly_frob(a.num, p), fqpoly_frob(a.den, p)};  // canonical form preserved
}

inline KElem kelem_pow_pk(const KElem& a, int k) {
  KElem x = a;
  for (int i = 0; i < k; ++i) x = frobenius_k(x);
  return x;
}

namespace detail {
// p-th root of a polynomial all of whose exponents are divisible by p
inline std::optional<FqPoly> poly_pth_root(const FqPoly& f, int p) {
  FqPoly out;
  out.t.reserve(f.t.size());
  for (auto& tm : f.t) {
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) {
      if (tm.m.e[i] % p) return std::nullopt;
      m.e[i] = (uint16_t)(tm.m.e[i] / p);
    }
    out.t.push_back({m, fq_pth_root(tm.c)});
  }
  return out;
}
}  // namespace detail

/* Membership in k^p: clear the denominator (a = N D^{p-1} / D^p) and check
 * every exponent of the numerator divisible by p; F_q is perfect, so the
 * coefficients always admit roots. */
inline bool in_kp(const KElem& a) {
  if (a.is_zero()) return true;
  const int p = a.ctx()->p;
  FqPoly cleared = a.num * a.den.pow(p - 1);
  for (auto& tm : cleared.t)
    for (int i = 0; i < kMaxVars; ++i)
      if (tm.m.e[i] % p) return false;
  return true;
}

inline KElem pth_root(const KElem& a) {
  if (a.is_zero()) return a;
  const int p = a.ctx()->p;
  FqPoly cleared = a.num * a.den.pow(p - 1);
  auto root = detail::poly_pth_root(cleared, p);
  if (!root) fail(errc::not_a_pth_power, "element is not a p-th power");
  return KElem::make(*root, a.den);
}

// a in k^{p^m}? if so optionally return the p^m-th root
inline bool in_kpm(const KElem& a, int m, KElem* root = nullptr) {
  KElem x = a;
  for (int i = 0; i < m; ++i) {
    if (!in_kp(x)) return false;
    x = pth_root(x);
  }
  if (root) *root = x;
  return true;
}

/* Multi-index s in [0,p-1]^r for the p-basis monomials u^s. */
using PIndex = std::vector<int>;

/* Unique expansion a = sum_s c_s u^s with c_s in k^p. */
inline std::map<PIndex, KElem> pbasis_expand(const KElem& a) {
  const FieldCtx* k = a.ctx();
  const int p = k->p, r = k->r;
  std::map<PIndex, KElem> out;
  if (a.is_zero()) return out;
  FqPoly cleared = a.num * a.den.pow(p - 1);
  FqPoly denp = a.den.pow(p);
  std::map<PIndex, FqPoly> classes;
  for (auto& tm : cleared.t) {
    PIndex s(r, 0);
    Mono m = tm.m;
    for (int i = 0; i < r; ++i) {
      s[i] = tm.m.e[i] % p;
      m.e[i] = (uint16_t)(tm.m.e[i] - s[i]);
    }
    classes[s].t.push_back({m, tm.c});
  }
  for (auto& [s, poly] : classes) {
    FqPoly f = poly;
    f.normalize();
    if (f.is_zero()) continue;
    KElem c = KElem::make(f, denp);
    if (!c.is_zero()) out.emplace(s, c);
  }
  return out;
}

// formal partial derivative d/du_{i+1} via the quotient rule
inline KElem partial_derivative(const KElem& a, int i) {
  FqPoly dn = fqpoly_dvar(a.num, i), dd = fqpoly_dvar(a.den, i);
  return KElem::make(dn * a.den - a.num * dd, a.den * a.den);
}

/* -------- Laurent polynomials over k in t -------- */

constexpr long kValInf = LONG_MAX;

struct LaurentK {
  std::map<long, KElem> c;  // t-degree -> coefficient, no zeros stored

  static LaurentK zero() { return LaurentK{}; }
  static LaurentK monomial(long deg, const KElem& a) {
    LaurentK f;
    if (!a.is_zero()) f.c.emplace(deg, a);
    return f;
  }

  bool is_zero() const { return c.empty(); }

  void set(long deg, const KElem& a) {
    if (a.is_zero())
      c.erase(deg);
    else
      c[deg] = a;
  }
  KElem coeff(long deg, const FieldCtx* k) const {
    auto it = c.find(deg);
    return it == c.end() ? KElem::zero(k) : it->second;
  }

  friend bool operator==(const LaurentK& a, const LaurentK& b) { return a.c == b.c; }
  friend bool operator!=(const LaurentK& a, const LaurentK& b) { return !(a.c == b.c); }

  friend LaurentK operator+(const LaurentK& a, const LaurentK& b) {
    LaurentK out = a;
    for (auto& [d, x] : b.c) {
      auto it = out.c.find(d);
      if (it == out.c.end()) {
        out.c.emplace(d, x);
      } else {
        it->second = it->second + x;
        if (it->second.is_zero()) out.c.erase(it);
      }
    }
    return out;
  }
  friend LaurentK operator-(const LaurentK& a) {
    LaurentK out = a;
    for (auto& [d, x] : out.c) x = -x;
    return out;
  }
  friend LaurentK operator-(const LaurentK& a, const LaurentK& b) { return a + (-b); }
  friend LaurentK operator*(const LaurentK& a, const LaurentK& b) {
    LaurentK out;
    for (auto& [da, xa] : a.c)
      for (auto& [db, xb] : b.c) {
        KElem prod = xa * xb;
        if (prod.is_zero()) continue;
        auto it = out.c.find(da + db);
        if (it == out.c.end()) {
          out.c.emplace(da + db, prod);
        } else {
          it->second = it->second + prod;
          if (it->second.is_zero()) out.c.erase(it);
        }
      }
    return out;
  }

  LaurentK scaled(const KElem& a) const {
    LaurentK out;
    for (auto& [d, x] : c) {
      KElem prod = x * a;
      if (!prod.is_zero()) out.c.emplace(d, prod);
    }
    return out;
  }
};

inline long t_valuation(const LaurentK& f) { return f.is_zero() ? kValInf : f.c.begin()->first; }

// f -> f^p: coefficients^p, degrees *p
inline LaurentK laurent_frob(const LaurentK& f, int p) {
  LaurentK out;
  for (auto& [d, x] : f.c) out.c.emplace(d * p, frobenius_k(x));
  return out;
}

inline LaurentK laurent_pow(const LaurentK& f, long e, const FieldCtx* k) {
  LaurentK acc = LaurentK::monomial(0, KElem::one(k)), base = f;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace swan
