#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swan/cyclo.hpp"
#include "swan/kelem.hpp"
#include "swan/poly.hpp"
#include "swan/witt.hpp"

namespace swan {

using CycPoly = Poly<CycloElem>;  // u-lifts at slots 0..r-1, unramified gen at kLiftGenSlot

/* Lift context: cyclotomic coefficients, the residue field being lifted,
 * and the naive monic integer lift of ext_poly for h > 1. */
struct LiftCtx {
  const CycloCtx* cyc = nullptr;
  const FieldCtx* k = nullptr;

  CycloElem one() const { return CycloElem::from_rat(cyc, Rat(1)); }
  CycPoly pone() const { return CycPoly::constant(one()); }
};

/* reduce powers of the unramified generator w modulo the lifted ext_poly */
inline CycPoly reduce_w(CycPoly f, const LiftCtx& L) {
  const int h = L.k->h;
  if (h == 1) return f;
  bool again = true;
  while (again) {
    again = false;
    CycPoly out;
    for (auto& tm : f.t) {
      int e = tm.m.e[kLiftGenSlot];
      if (e < h) {
        out.t.push_back(tm);
        continue;
      }
      again = true;
      // w^e = w^(e-h) * (w^h) with w^h = -(lower part of ext lift)
      Mono base = tm.m;
      base.e[kLiftGenSlot] = (uint16_t)(e - h);
      for (int i = 0; i < h; ++i) {
        int ci = L.k->ext_poly[i];
        if (!ci) continue;
        Mono m = base;
        m.e[kLiftGenSlot] = (uint16_t)(m.e[kLiftGenSlot] + i);
        out.t.push_back({m, tm.c.scaled(Rat(-ci))});
      }
    }
    out.normalize();
    f = std::move(out);
  }
  return f;
}

inline CycPoly cp_mul(const CycPoly& a, const CycPoly& b, const LiftCtx& L) {
  return reduce_w(a * b, L);
}

/* fraction of u-lift polynomials; no gcd reduction, equality by
 * cross-multiplication, valuations via Gauss norms */
struct UFracC {
  CycPoly num, den;

  static UFracC zero(const LiftCtx& L) { return UFracC{CycPoly{}, L.pone()}; }
  static UFracC one(const LiftCtx& L) { return UFracC{L.pone(), L.pone()}; }
  static UFracC from_poly(CycPoly p, const LiftCtx& L) { return UFracC{std::move(p), L.pone()}; }

  bool is_zero() const { return num.is_zero(); }
  bool den_is_one() const {
    return den.t.size() == 1 && den.t[0].m.is_one() && den.t[0].c.is_one();
  }
};

inline bool uf_equal(const UFracC& a, const UFracC& b, const LiftCtx& L) {
  return cp_mul(a.num, b.den, L) == cp_mul(b.num, a.den, L);
}

inline UFracC uf_add(const UFracC& a, const UFracC& b, const LiftCtx& L) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_is_one() && b.den_is_one()) return UFracC{a.num + b.num, a.den};
  if (a.den == b.den) return UFracC{a.num + b.num, a.den};
  return UFracC{cp_mul(a.num, b.den, L) + cp_mul(b.num, a.den, L), cp_mul(a.den, b.den, L)};
}

inline UFracC uf_neg(const UFracC& a) { return UFracC{-a.num, a.den}; }
inline UFracC uf_sub(const UFracC& a, const UFracC& b, const LiftCtx& L) { return uf_add(a, uf_neg(b), L); }

inline UFracC uf_mul(const UFracC& a, const UFracC& b, const LiftCtx& L) {
  if (a.is_zero() || b.is_zero()) return UFracC::zero(L);
  if (a.den_is_one() && b.den_is_one()) return UFracC{cp_mul(a.num, b.num, L), a.den};
  return UFracC{cp_mul(a.num, b.num, L), cp_mul(a.den, b.den, L)};
}

inline UFracC uf_scale(const UFracC& a, const CycloElem& c) {
  UFracC out = a;
  out.num = out.num.scaled(c);
  return out;
}

inline UFracC uf_dvar(const UFracC& a, int var, const LiftCtx& L) {
  auto dpoly = [&](const CycPoly& f) {
    CycPoly out;
    for (auto& tm : f.t) {
      int e = tm.m.e[var];
      if (!e) continue;
      Mono m = tm.m;
      m.e[var] = (uint16_t)(e - 1);
      out.t.push_back({m, tm.c.scaled(Rat(e))});
    }
    out.normalize();
    return out;
  };
  if (a.den_is_one()) return UFracC{dpoly(a.num), a.den};
  CycPoly n = cp_mul(dpoly(a.num), a.den, L) - cp_mul(a.num, dpoly(a.den), L);
  return UFracC{n, cp_mul(a.den, a.den, L)};
}

// substitution u_i -> u_i^q, w -> w^q (arithmetic Frobenius on the lift)
inline CycPoly cp_frobq(const CycPoly& f, int q, const LiftCtx& L) {
  CycPoly out;
  for (auto& tm : f.t) {
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = (uint16_t)(tm.m.e[i] * q);
    out.t.push_back({m, tm.c});
  }
  out.normalize();
  return reduce_w(out, L);
}
inline UFracC uf_frobq(const UFracC& a, int q, const LiftCtx& L) {
  return UFracC{cp_frobq(a.num, q, L), cp_frobq(a.den, q, L)};
}

/* Gauss valuation: min over coefficients (the u-lifts are orthonormal) */
inline std::optional<Rat> cp_vp(const CycPoly& f) {
  std::optional<Rat> best;
  for (auto& tm : f.t) {
    auto v = cyclo_vp(tm.c);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}
inline std::optional<Rat> uf_vp(const UFracC& a) {
  auto vn = cp_vp(a.num);
  if (!vn) return std::nullopt;
  auto vd = cp_vp(a.den);
  return *vn - *vd;
}

/* Laurent polynomials in T over the lift ring; degrees are <= 0 in use. */
using TLaurent = std::map<long, UFracC>;

inline bool tl_is_zero(const TLaurent& f) { return f.empty(); }

inline TLaurent tl_add(const TLaurent& a, const TLaurent& b, const LiftCtx& L) {
  TLaurent out = a;
  for (auto& [d, x] : b) {
    auto it = out.find(d);
    if (it == out.end()) {
      out.emplace(d, x);
    } else {
      it->second = uf_add(it->second, x, L);
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

inline TLaurent tl_neg(const TLaurent& a) {
  TLaurent out = a;
  for (auto& [d, x] : out) x = uf_neg(x);
  return out;
}

// product, dropping degrees below -trunc (trunc < 0 disables truncation)
inline TLaurent tl_mul(const TLaurent& a, const TLaurent& b, const LiftCtx& L, long trunc = -1) {
  TLaurent out;
  for (auto& [da, xa] : a)
    for (auto& [db, xb] : b) {
      long d = da + db;
      if (trunc >= 0 && d < -trunc) continue;
      UFracC prod = uf_mul(xa, xb, L);
      if (prod.is_zero()) continue;
      auto it = out.find(d);
      if (it == out.end()) {
        out.emplace(d, prod);
      } else {
        it->second = uf_add(it->second, prod, L);
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

inline TLaurent tl_pow(TLaurent base, long e, const LiftCtx& L, long trunc = -1) {
  TLaurent acc{{0, UFracC::one(L)}};
  while (e) {
    if (e & 1) acc = tl_mul(acc, base, L, trunc);
    base = tl_mul(base, base, L, trunc);
    e >>= 1;
  }
  return acc;
}

inline TLaurent tl_scale(const TLaurent& a, const CycloElem& c) {
  TLaurent out;
  for (auto& [d, x] : a) {
    UFracC y = uf_scale(x, c);
    if (!y.is_zero()) out.emplace(d, y);
  }
  return out;
}

inline TLaurent tl_dT(const TLaurent& a, const LiftCtx& L) {
  TLaurent out;
  for (auto& [d, x] : a) {
    if (d == 0) continue;
    UFracC y = uf_scale(x, CycloElem::from_rat(L.cyc, Rat(d)));
    if (!y.is_zero()) out.emplace(d - 1, y);
  }
  return out;
}
inline TLaurent tl_dvar(const TLaurent& a, int var, const LiftCtx& L) {
  TLaurent out;
  for (auto& [d, x] : a) {
    UFracC y = uf_dvar(x, var, L);
    if (!y.is_zero()) out.emplace(d, y);
  }
  return out;
}

/* Witt-vector lift with coordinates in T^{-1} (lift ring)[T^{-1}] */
struct WittLift {
  std::vector<TLaurent> f;
  int len() const { return (int)f.size(); }
};

/* domain adapter for the integer universal polynomials */
struct TOps {
  const LiftCtx* L;
  using Dom = TLaurent;
  TLaurent zero() const { return TLaurent{}; }
  bool is_zero(const TLaurent& a) const { return a.empty(); }
  TLaurent add(const TLaurent& a, const TLaurent& b) const { return tl_add(a, b, *L); }
  TLaurent mul(const TLaurent& a, const TLaurent& b) const { return tl_mul(a, b, *L); }
  TLaurent scalar(const cpp_int& c) const {
    if (c == 0) return {};
    return TLaurent{{0, UFracC::from_poly(CycPoly::constant(CycloElem::from_rat(L->cyc, Rat(c))), *L)}};
  }
};

inline LiftCtx make_lift_ctx(const FieldCtx* k, int m) {
  return LiftCtx{CycloCtx::get(k->p, m), k};
}

/* Teichmueller-naive lift of k into the cyclotomic u-lift ring: every F_p
 * digit goes to {0..p-1}; the F_q generator goes to w. */
UFracC lift_kelem(const KElem& a, const LiftCtx& L);

/* lift of the co-monomial lambda t^{-n p^m}: coordinate i is
 * (lift of lambda_i) T^{-n p^i} */
WittLift lift_witt_monomial(const WittK& lam, long n, const LiftCtx& L);

/* truncated series 1 + c_1 T^{-1} + ... + c_D T^{-D} */
struct TruncSeries {
  int D = 0;
  std::vector<UFracC> c;  // index i = coefficient of T^{-i}, size D+1
};

TruncSeries pi_exponential(const WittLift& lift, int D, const LiftCtx& L);
TruncSeries theta_quotient(const WittLift& lift, int D, const LiftCtx& L);
TLaurent connection_coeffs_exact(const WittLift& lift, int direction, int D, const LiftCtx& L);

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b, const LiftCtx& L);

/* printing: coefficients as polynomials in pi (= pi_m) and the u lifts */
std::string cyclo_to_string(const CycloElem& a);
std::string piexp_coeff_to_string(const UFracC& a, const LiftCtx& L);

}  // namespace swan
