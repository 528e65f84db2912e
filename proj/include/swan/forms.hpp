#pragma once

#include <map>
#include <utility>
#include <vector>

#include "swan/covector.hpp"
#include "swan/kelem.hpp"

namespace swan {

/* 1-form sum h_i du_i over k; r components. */
struct OneForm {
  std::vector<KElem> h;

  static OneForm zero(const FieldCtx* k) { return OneForm{std::vector<KElem>((size_t)k->r, KElem::zero(k))}; }
  bool is_zero() const {
    for (auto& x : h)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.h == b.h; }
  friend OneForm operator+(const OneForm& a, const OneForm& b) {
    OneForm out = a;
    for (size_t i = 0; i < out.h.size(); ++i) out.h[i] = out.h[i] + b.h[i];
    return out;
  }
  friend OneForm operator-(const OneForm& a, const OneForm& b) {
    OneForm out = a;
    for (size_t i = 0; i < out.h.size(); ++i) out.h[i] = out.h[i] - b.h[i];
    return out;
  }
  OneForm scaled(const KElem& c) const {
    OneForm out = *this;
    for (auto& x : out.h) x = x * c;
    return out;
  }
};

/* 2-form: antisymmetric coefficients on du_i ^ du_j, i < j. */
struct TwoForm {
  std::map<std::pair<int, int>, KElem> c;
  bool is_zero() const {
    for (auto& [ij, x] : c)
      if (!x.is_zero()) return false;
    return true;
  }
};

/* refined-Swan value t^{-d} (alpha + beta dlog t) */
struct LogOneForm {
  long d = 0;
  OneForm alpha;
  KElem beta;

  friend bool operator==(const LogOneForm& a, const LogOneForm& b) {
    return a.d == b.d && a.alpha == b.alpha && a.beta == b.beta;
  }
};

inline OneForm d_k(const KElem& a) {
  const FieldCtx* k = a.ctx();
  OneForm out = OneForm::zero(k);
  for (int i = 0; i < k->r; ++i) out.h[i] = partial_derivative(a, i);
  return out;
}

inline TwoForm d_1(const OneForm& w) {
  TwoForm out;
  int r = (int)w.h.size();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      KElem c = partial_derivative(w.h[j], i) - partial_derivative(w.h[i], j);
      if (!c.is_zero()) out.c.emplace(std::make_pair(i, j), c);
    }
  return out;
}

inline bool is_closed(const OneForm& w) { return d_1(w).is_zero(); }

/* Cartier operator on closed 1-forms.  After the p-basis expansion
 * h_i = sum_s c_s u^s (c_s in k^p), only the s = (p-1) e_i class of h_i
 * contributes: C(f^p u_i^{p-1} du_i) = f du_i, every other monomial class
 * dies.  Inverse on representatives: C^{-1}(a db) = a^p b^{p-1} db. */
inline OneForm cartier(const OneForm& w, const FieldCtx* k) {
  if (!is_closed(w)) fail(errc::not_closed, "Cartier operator needs a closed form");
  OneForm out = OneForm::zero(k);
  for (int i = 0; i < k->r; ++i) {
    if (w.h[i].is_zero()) continue;
    auto expansion = pbasis_expand(w.h[i]);
    PIndex s(k->r, 0);
    s[i] = k->p - 1;
    auto it = expansion.find(s);
    if (it != expansion.end()) out.h[i] = pth_root(it->second);
  }
  return out;
}

inline OneForm cartier_inverse_rep(const KElem& a, const KElem& b) {
  // representative a^p b^{p-1} db of C^{-1}(a db)
  const FieldCtx* k = a.ctx();
  KElem scale = frobenius_k(a) * b.pow(k->p - 1);
  return d_k(b).scaled(scale);
}

inline bool is_exact(const OneForm& w, const FieldCtx* k) {
  return is_closed(w) && cartier(w, k).is_zero();
}

/* B_m / Z_m ladder: B_0 = 0, Z_0 = all; B_{m+1} = closed with C in B_m,
 * Z_{m+1} = closed with C in Z_m. */
inline bool in_Bm(const OneForm& w, int m, const FieldCtx* k) {
  if (m < 0) fail(errc::bad_input, "in_Bm needs m >= 0");
  if (m == 0) return w.is_zero();
  if (!is_closed(w)) return false;
  return in_Bm(cartier(w, k), m - 1, k);
}

inline bool in_Zm(const OneForm& w, int m, const FieldCtx* k) {
  if (m < 0) fail(errc::bad_input, "in_Zm needs m >= 0");
  if (m == 0) return true;
  if (!is_closed(w)) return false;
  return in_Zm(cartier(w, k), m - 1, k);
}

/* 1-form over E with a dlog t leg: sum (du_i coefficients) + c dlog t. */
struct EOneForm {
  std::vector<LaurentK> du;
  LaurentK dlogt;

  static EOneForm zero(const FieldCtx* k) {
    return EOneForm{std::vector<LaurentK>((size_t)k->r), LaurentK::zero()};
  }
  bool is_zero() const {
    if (!dlogt.is_zero()) return false;
    for (auto& x : du)
      if (!x.is_zero()) return false;
    return true;
  }
  friend EOneForm operator+(const EOneForm& a, const EOneForm& b) {
    EOneForm out = a;
    for (size_t i = 0; i < out.du.size(); ++i) out.du[i] = out.du[i] + b.du[i];
    out.dlogt = out.dlogt + b.dlogt;
    return out;
  }
  EOneForm scaled(const LaurentK& c) const {
    EOneForm out = *this;
    for (auto& x : out.du) x = x * c;
    out.dlogt = out.dlogt * c;
    return out;
  }
};

inline EOneForm d_E(const LaurentK& f, const FieldCtx* k) {
  EOneForm out = EOneForm::zero(k);
  for (auto& [deg, c] : f.c) {
    for (int i = 0; i < k->r; ++i) {
      KElem dc = partial_derivative(c, i);
      if (!dc.is_zero()) out.du[i] = out.du[i] + LaurentK::monomial(deg, dc);
    }
    KElem ec = KElem::from_int(k, deg) * c;  // e c t^e dlog t
    if (!ec.is_zero()) out.dlogt = out.dlogt + LaurentK::monomial(deg, ec);
  }
  return out;
}

/* F^s d: sum_i f_i^{p^{s-i}} dlog f_i = sum_i f_i^{p^{s-i}-1} df_i
 * (division-free; zero coordinates contribute 0). */
inline EOneForm fs_d(const WittE& f, int s, const FieldCtx* k) {
  if ((int)f.size() != s + 1) fail(errc::length_mismatch, "fs_d: vector length must be s+1");
  EOneForm out = EOneForm::zero(k);
  for (int i = 0; i <= s; ++i) {
    if (f[i].is_zero()) continue;
    long e = 1;
    for (int x = 0; x < s - i; ++x) e *= k->p;
    LaurentK scale = laurent_pow(f[i], e - 1, k);
    out = out + d_E(f[i], k).scaled(scale);
  }
  return out;
}

/* E_m expression from the Witt vector: sum_j lambda_j^{p^{m-j}-1} d/du_i(lambda_j). */
inline KElem tretretyi_E(const WittK& lam, int i, const FieldCtx* k) {
  KElem acc = KElem::zero(k);
  int m = (int)lam.size() - 1;
  for (int j = 0; j <= m; ++j) {
    if (lam[j].is_zero()) continue;
    long e = 1;
    for (int x = 0; x < m - j; ++x) e *= k->p;
    acc = acc + lam[j].pow(e - 1) * partial_derivative(lam[j], i);
  }
  return acc;
}

/* Refined Swan conductor of a character with sw > 0:
 * t^{-d} ( -n lambda_0^{p^m} dlog t + sum_j lambda_j^{p^{m-j}} dlog lambda_j )
 * evaluated on the canonical mod-p representative of the top graded piece. */
inline LogOneForm refined_swan(const Character& c) {
  const FieldCtx* k = c.k;
  long d = swan_conductor(c);
  if (d <= 0) fail(errc::unramified_character, "refined Swan conductor needs sw > 0");
  WittK lam = graded_piece_rep(c, d);
  int m = (int)lam.size() - 1;
  int v = 0;
  long n = detail::odd_part(d, k->p, &v);
  LogOneForm out;
  out.d = d;
  out.alpha = OneForm::zero(k);
  for (int j = 0; j <= m; ++j) {
    if (lam[j].is_zero()) continue;
    long e = 1;
    for (int x = 0; x < m - j; ++x) e *= k->p;
    out.alpha = out.alpha + d_k(lam[j]).scaled(lam[j].pow(e - 1));
  }
  KElem lam0_pm = lam[0];
  for (int x = 0; x < m; ++x) lam0_pm = frobenius_k(lam0_pm);
  out.beta = KElem::from_int(k, -n) * lam0_pm;
  return out;
}

/* Membership in B Gr_d: alpha in B_{m+1}, beta in k^{p^m}, and
 * n C^m(alpha) + d(C^m(beta)) = 0. */
inline bool bgr_membership(const LogOneForm& y, const FieldCtx* k) {
  if (y.d <= 0) fail(errc::bad_input, "BGr membership needs d > 0");
  int m = 0;
  long n = detail::odd_part(y.d, k->p, &m);
  if (!in_Bm(y.alpha, m + 1, k)) return false;
  KElem beta_root;
  if (!in_kpm(y.beta, m, &beta_root)) return false;
  OneForm cm = y.alpha;
  for (int x = 0; x < m; ++x) {
    if (!is_closed(cm)) return false;
    cm = cartier(cm, k);
  }
  OneForm lhs = cm.scaled(KElem::from_int(k, n)) + d_k(beta_root);
  return lhs.is_zero();
}

}  // namespace swan
