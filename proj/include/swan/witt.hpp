#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "swan/kelem.hpp"
#include "swan/poly.hpp"

namespace swan {

using cpp_int = boost::multiprecision::cpp_int;
using ZPoly = Poly<cpp_int>;  // X_i at slot i, Y_i at slot 4+i

template <>
inline ZPoly ZPoly::constant_one_like(const ZPoly&) {
  return ZPoly::constant(cpp_int(1));
}

constexpr int kWittYBase = 4;  // m <= 3, so X uses slots 0..3, Y uses 4..7

/* Universal sum/product/negation polynomials for W_*(.), computed once over
 * the integers by the ghost recursion and cached on disk.  S_n is isobaric:
 * the ghost identity w_n(S_0..S_n) = w_n(X) + w_n(Y) holds exactly over Z. */
class WittRing {
 public:
  static int default_bound(int p) { return p <= 3 ? 3 : 2; }
  static int bound(int p);
  static void set_bound(int p, int m);  // config override (capped by exponent width)
  static const WittRing& get(int p, int m);

  int p() const { return p_; }
  int levels() const { return (int)S_.size() - 1; }
  const ZPoly& S(int n) const { return S_[n]; }
  const ZPoly& P(int n) const { return P_[n]; }
  const ZPoly& N(int n) const { return N_[n]; }

 private:
  friend struct WittRingAccess;
  int p_ = 0;
  std::vector<ZPoly> S_, P_, N_;
};

/* ---- generic evaluation of universal polynomials --------------------- */

template <class Dom, class Ops>
class WPolyEval {
 public:
  WPolyEval(const std::vector<Dom>& xs, const std::vector<Dom>& ys, const Ops& ops) : ops_(ops) {
    for (size_t i = 0; i < xs.size(); ++i) vals_[i] = &xs[i];
    for (size_t i = 0; i < ys.size(); ++i) vals_[kWittYBase + i] = &ys[i];
  }

  Dom eval(const ZPoly& f) {
    Dom acc = ops_.zero();
    for (auto& tm : f.t) {
      bool dead = false;
      for (int v = 0; v < 8 && !dead; ++v)
        if (tm.m.e[v] && (!vals_[v] || ops_.is_zero(*vals_[v]))) dead = true;
      if (dead) continue;
      Dom term = ops_.scalar(tm.c);
      if (ops_.is_zero(term)) continue;
      for (int v = 0; v < 8; ++v) {
        int e = tm.m.e[v];
        if (!e) continue;
        term = ops_.mul(term, power(v, e));
      }
      acc = ops_.add(acc, term);
    }
    return acc;
  }

 private:
  // binary powering with a shared memo per variable
  const Dom& power(int v, int e) {
    auto& memo = pows_[v];
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    Dom val = e == 1 ? *vals_[v]
              : e % 2 ? ops_.mul(power(v, e - 1), *vals_[v])
                      : ops_.mul(power(v, e / 2), power(v, e / 2));
    return memo.emplace(e, std::move(val)).first->second;
  }
  std::array<const Dom*, 8> vals_{};
  std::array<std::map<int, Dom>, 8> pows_;
  const Ops& ops_;
};

/* domain adapters */

struct KOps {
  const FieldCtx* k;
  using Dom = KElem;
  KElem zero() const { return KElem::zero(k); }
  bool is_zero(const KElem& a) const { return a.is_zero(); }
  KElem add(const KElem& a, const KElem& b) const { return a + b; }
  KElem mul(const KElem& a, const KElem& b) const { return a * b; }
  KElem scalar(const cpp_int& c) const {
    return KElem::from_int(k, (long long)(c % k->p));
  }
  KElem frob(const KElem& a) const { return frobenius_k(a); }
};

struct EOps {
  const FieldCtx* k;
  using Dom = LaurentK;
  LaurentK zero() const { return LaurentK::zero(); }
  bool is_zero(const LaurentK& a) const { return a.is_zero(); }
  LaurentK add(const LaurentK& a, const LaurentK& b) const { return a + b; }
  LaurentK mul(const LaurentK& a, const LaurentK& b) const { return a * b; }
  LaurentK scalar(const cpp_int& c) const {
    return LaurentK::monomial(0, KElem::from_int(k, (long long)(c % k->p)));
  }
  LaurentK frob(const LaurentK& a) const { return laurent_frob(a, k->p); }
};

struct ZOps {
  using Dom = ZPoly;
  ZPoly zero() const { return ZPoly{}; }
  bool is_zero(const ZPoly& a) const { return a.is_zero(); }
  ZPoly add(const ZPoly& a, const ZPoly& b) const { return a + b; }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const { return a * b; }
  ZPoly scalar(const cpp_int& c) const { return ZPoly::constant(c); }
};

/* ---- Witt vectors ----------------------------------------------------- */

template <class Dom>
using WittVec = std::vector<Dom>;  // coords lambda_0..lambda_m, length m+1

using WittK = WittVec<KElem>;
using WittE = WittVec<LaurentK>;
using WittZ = WittVec<ZPoly>;

// convenience wrappers fixing p through the ops (char-p domains)
class WittCtx {
 public:
  WittCtx(const FieldCtx* k) : k_(k) {}
  const FieldCtx* field() const { return k_; }
  int p() const { return k_->p; }

  WittK add(const WittK& a, const WittK& b) const { return witt_add_p(a, b, KOps{k_}); }
  WittK mul(const WittK& a, const WittK& b) const { return witt_mul_p(a, b, KOps{k_}); }
  WittK neg(const WittK& a) const { return witt_neg_p(a, KOps{k_}); }
  WittK sub(const WittK& a, const WittK& b) const { return add(a, neg(b)); }

  WittE add(const WittE& a, const WittE& b) const { return witt_add_p(a, b, EOps{k_}); }
  WittE mul(const WittE& a, const WittE& b) const { return witt_mul_p(a, b, EOps{k_}); }
  WittE neg(const WittE& a) const { return witt_neg_p(a, EOps{k_}); }
  WittE sub(const WittE& a, const WittE& b) const { return add(a, neg(b)); }

  template <class Dom, class Ops>
  static WittVec<Dom> witt_add_p(const WittVec<Dom>& a, const WittVec<Dom>& b, const Ops& ops) {
    if (a.size() != b.size()) fail(errc::length_mismatch, "witt add on different lengths");
    const WittRing& W = WittRing::get(ops.k->p, (int)a.size() - 1);
    WPolyEval<Dom, Ops> ev(a, b, ops);
    WittVec<Dom> out(a.size());
    for (size_t n = 0; n < a.size(); ++n) out[n] = ev.eval(W.S((int)n));
    return out;
  }
  template <class Dom, class Ops>
  static WittVec<Dom> witt_mul_p(const WittVec<Dom>& a, const WittVec<Dom>& b, const Ops& ops) {
    if (a.size() != b.size()) fail(errc::length_mismatch, "witt mul on different lengths");
    const WittRing& W = WittRing::get(ops.k->p, (int)a.size() - 1);
    WPolyEval<Dom, Ops> ev(a, b, ops);
    WittVec<Dom> out(a.size());
    for (size_t n = 0; n < a.size(); ++n) out[n] = ev.eval(W.P((int)n));
    return out;
  }
  template <class Dom, class Ops>
  static WittVec<Dom> witt_neg_p(const WittVec<Dom>& a, const Ops& ops) {
    const WittRing& W = WittRing::get(ops.k->p, (int)a.size() - 1);
    WPolyEval<Dom, Ops> ev(a, {}, ops);
    WittVec<Dom> out(a.size());
    for (size_t n = 0; n < a.size(); ++n) out[n] = ev.eval(W.N((int)n));
    return out;
  }

 private:
  const FieldCtx* k_;
};

/* structure maps */

template <class Dom>
WittVec<Dom> verschiebung(const WittVec<Dom>& a, Dom zero) {
  WittVec<Dom> out;
  out.reserve(a.size() + 1);
  out.push_back(std::move(zero));
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

inline WittK frobenius_bar(const WittK& a) {
  WittK out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = frobenius_k(a[i]);
  return out;
}
inline WittE frobenius_bar(const WittE& a, int p) {
  WittE out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = laurent_frob(a[i], p);
  return out;
}

inline WittK times_p(const WittK& a, const FieldCtx* k) {
  return verschiebung(frobenius_bar(a), KElem::zero(k));
}
inline WittE times_p(const WittE& a, const FieldCtx* k) {
  return verschiebung(frobenius_bar(a, k->p), LaurentK::zero());
}

inline bool witt_is_zero(const WittK& a) {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}
inline bool witt_is_zero(const WittE& a) {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

/* pW_m(k) = { (0, x_1^p, ..., x_m^p) } */
inline bool in_pW(const WittK& a) {
  if (a.empty() || !a[0].is_zero()) return false;
  for (size_t j = 1; j < a.size(); ++j)
    if (!in_kp(a[j])) return false;
  return true;
}

inline WittK divide_by_p(const WittK& a) {
  if (!in_pW(a)) fail(errc::not_divisible, "vector not in pW_m");
  if (a.empty()) fail(errc::not_divisible, "divide_by_p needs length >= 1");
  WittK out;
  out.reserve(a.size() - 1);
  for (size_t j = 1; j < a.size(); ++j) out.push_back(pth_root(a[j]));
  return out;
}

/* Kato valuation on W_s(E): v(l_0..l_s) = min_i p^(s-i) v_t(l_i). */
inline long kato_valuation(const WittE& a, int p) {
  if (a.empty()) return kValInf;
  long best = kValInf;
  int s = (int)a.size() - 1;
  for (int i = 0; i <= s; ++i) {
    long v = t_valuation(a[i]);
    if (v == kValInf) continue;
    long w = v;
    for (int j = 0; j < s - i; ++j) w *= p;
    best = std::min(best, w);
  }
  return best;
}

/* Canonical representative of a + pW_m(k): coordinates j >= 1 have zero
 * s = 0 component in the p-basis expansion.  Subtracting a pW element whose
 * support starts at j leaves coordinates < j unchanged, so one upward pass
 * suffices. */
inline WittK canonical_mod_p(WittK a, const WittCtx& W) {
  const FieldCtx* k = W.field();
  for (size_t j = 1; j < a.size(); ++j) {
    auto expansion = pbasis_expand(a[j]);
    PIndex zero_idx(k->r, 0);
    auto it = expansion.find(zero_idx);
    if (it == expansion.end() || it->second.is_zero()) continue;
    WittK sub(a.size(), KElem::zero(k));
    sub[j] = it->second;  // lies in k^p, so sub is in pW_m
    a = W.sub(a, sub);
  }
  return a;
}

/* phantom components over a characteristic-zero polynomial lift */
inline std::vector<ZPoly> ghost_components(const WittZ& a, int p) {
  std::vector<ZPoly> out(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    ZPoly acc;
    cpp_int pk = 1;
    for (size_t i = 0; i <= j; ++i) {
      long e = 1;
      for (size_t x = 0; x < j - i; ++x) e *= p;
      acc = acc + a[i].pow(e).scaled(pk);
      pk *= p;
    }
    out[j] = acc;
  }
  return out;
}

/* integer-domain Witt arithmetic (ghost-oracle side) */
inline WittZ witt_add_z(const WittZ& a, const WittZ& b, int p) {
  if (a.size() != b.size()) fail(errc::length_mismatch, "witt add on different lengths");
  const WittRing& W = WittRing::get(p, (int)a.size() - 1);
  ZOps ops;
  WPolyEval<ZPoly, ZOps> ev(a, b, ops);
  WittZ out(a.size());
  for (size_t n = 0; n < a.size(); ++n) out[n] = ev.eval(W.S((int)n));
  return out;
}
inline WittZ witt_mul_z(const WittZ& a, const WittZ& b, int p) {
  if (a.size() != b.size()) fail(errc::length_mismatch, "witt mul on different lengths");
  const WittRing& W = WittRing::get(p, (int)a.size() - 1);
  ZOps ops;
  WPolyEval<ZPoly, ZOps> ev(a, b, ops);
  WittZ out(a.size());
  for (size_t n = 0; n < a.size(); ++n) out[n] = ev.eval(W.P((int)n));
  return out;
}
inline WittZ witt_neg_z(const WittZ& a, int p) {
  const WittRing& W = WittRing::get(p, (int)a.size() - 1);
  ZOps ops;
  WPolyEval<ZPoly, ZOps> ev(a, {}, ops);
  WittZ out(a.size());
  for (size_t n = 0; n < a.size(); ++n) out[n] = ev.eval(W.N((int)n));
  return out;
}

}  // namespace swan
