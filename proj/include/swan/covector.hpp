#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "swan/witt.hpp"

namespace swan {

/* A Witt covector over E = k((t)), stored as the window (f_0..f_m); the
 * class is unchanged under prefixing zeros (V). */
struct CoVector {
  std::vector<LaurentK> f;

  int len() const { return (int)f.size(); }
  bool is_zero() const {
    for (auto& x : f)
      if (!x.is_zero()) return false;
    return true;
  }
};

/* Co-monomial of degree -d, d = n p^m, (n,p) = 1: the covector
 * (.., 0, w_0 t^{-n}, w_1 t^{-np}, .., w_m t^{-d}). */
struct CoMonomial {
  long n = 1;
  int m = 0;
  WittK witt;  // length m+1

  long degree(int p) const {
    long d = n;
    for (int i = 0; i < m; ++i) d *= p;
    return d;
  }
};

struct Character {
  const FieldCtx* k = nullptr;
  std::map<long, CoMonomial> wild;  // keyed by n; each witt not in pW (pure)
  WittK constant;                   // residual part; conductor 0
  long tame_order = 1;              // prime-to-p twist order; conductor 0

  bool wild_trivial() const { return wild.empty(); }
};

struct GradedParts {
  // wild graded pieces keyed by (n, level); piece of degree d = n p^level
  std::map<std::pair<long, int>, WittK> pieces;
  WittK constant;
  bool dropped_positive = false;  // a CW(t k[[t]]) summand was discarded
};

namespace detail {

inline long odd_part(long e, int p, int* val) {
  int v = 0;
  while (e % p == 0) {
    e /= p;
    ++v;
  }
  *val = v;
  return e;
}

// embed a co-monomial at window length len (>= m+1 ... levels counted from the right end)
inline CoVector embed_comonomial(const CoMonomial& c, int len, const FieldCtx* k) {
  CoVector out;
  out.f.assign(len, LaurentK::zero());
  long deg = -c.n;
  for (int i = 0; i <= c.m; ++i) {
    int pos = (len - 1) - (c.m - i);
    if (pos < 0) fail(errc::bad_input, "window too short for co-monomial");
    out.f[pos] = LaurentK::monomial(deg, c.witt[i]);
    deg *= k->p;
  }
  return out;
}

}  // namespace detail

/* Graded decomposition of a covector: peel graded components of the first
 * nonzero coordinate, Witt-subtract the corresponding covectors, recurse.
 * A monomial c t^e sitting i slots from the right end belongs to the piece
 * of degree -e p^i; pieces of equal degree are Witt-summed in W_{v_p(d)}(k). */
inline GradedParts graded_decompose(const CoVector& cov, const FieldCtx* k) {
  GradedParts out;
  const int p = k->p;
  const int m = cov.len() - 1;
  if (m < 0) return out;
  WittCtx W(k);

  std::vector<LaurentK> work = cov.f;
  out.constant.assign(m + 1, KElem::zero(k));

  for (int j = 0; j <= m; ++j) {
    while (!work[j].is_zero()) {
      auto [deg, coeff] = *work[j].c.begin();
      const int i = m - j;  // distance from the right end
      if (deg < 0) {
        long e = -deg;
        int ve = 0;
        long n = detail::odd_part(e, p, &ve);
        int level = ve + i;
        auto key = std::make_pair(n, level);
        auto it = out.pieces.find(key);
        if (it == out.pieces.end()) {
          WittK w(level + 1, KElem::zero(k));
          w[ve] = coeff;
          out.pieces.emplace(key, std::move(w));
        } else {
          WittK w(level + 1, KElem::zero(k));
          w[ve] = coeff;
          it->second = W.add(it->second, w);
          if (witt_is_zero(it->second)) out.pieces.erase(it);
        }
      } else if (deg == 0) {
        WittK w(m + 1, KElem::zero(k));
        w[j] = coeff;
        out.constant = W.add(out.constant, w);
      } else {
        out.dropped_positive = true;  // CW(t k[[t]]) dies in H^1
      }
      // subtract the single-monomial covector; coordinates before j stay 0
      WittE piece(m + 1, LaurentK::zero());
      piece[j] = LaurentK::monomial(deg, coeff);
      work = W.sub(work, piece);
    }
  }
  return out;
}

/* Minimal lifting: per n, push every graded piece to the top level present
 * with times_p (which fixes the class mod (F-1)), Witt-sum, then divide by
 * p while possible.  The result is pure: each surviving witt is not in pW. */
inline Character minimal_lifting(const CoVector& cov, const FieldCtx* k) {
  GradedParts parts = graded_decompose(cov, k);
  WittCtx W(k);
  Character ch;
  ch.k = k;

  std::map<long, std::map<int, WittK>> by_n;
  for (auto& [key, w] : parts.pieces) by_n[key.first][key.second] = w;

  for (auto& [n, levels] : by_n) {
    int M = levels.rbegin()->first;
    WittK mu(M + 1, KElem::zero(k));
    for (auto& [v, w] : levels) {
      WittK lifted = w;
      for (int i = v; i < M; ++i) lifted = times_p(lifted, k);
      mu = W.add(mu, lifted);
    }
    while (!witt_is_zero(mu) && M > 0 && in_pW(mu)) {
      mu = divide_by_p(mu);
      --M;
    }
    if (witt_is_zero(mu)) continue;
    ch.wild.emplace(n, CoMonomial{n, M, std::move(mu)});
  }
  ch.constant = parts.constant;
  // trim trailing structure of the constant part: strip leading zeros (V-prefix)
  while (ch.constant.size() > 1 && ch.constant.front().is_zero())
    ch.constant.erase(ch.constant.begin());
  if (ch.constant.size() == 1 && ch.constant[0].is_zero()) ch.constant.clear();
  return ch;
}

inline long swan_conductor(const Character& c) {
  long best = 0;
  for (auto& [n, cm] : c.wild) best = std::max(best, cm.degree(c.k->p));
  return best;
}

inline bool fil_membership(const CoVector& cov, long d, const FieldCtx* k) {
  if (d < 0) fail(errc::bad_input, "fil_membership needs d >= 0");
  return swan_conductor(minimal_lifting(cov, k)) <= d;
}

/* canonical mod-p representative of the degree-d piece (zero if absent) */
inline WittK graded_piece_rep(const Character& c, long d) {
  if (d <= 0) fail(errc::bad_input, "graded_piece_rep needs d > 0");
  const int p = c.k->p;
  int v = 0;
  long n = detail::odd_part(d, p, &v);
  WittCtx W(c.k);
  auto it = c.wild.find(n);
  if (it == c.wild.end() || it->second.m != v) return WittK(v + 1, KElem::zero(c.k));
  return canonical_mod_p(it->second.witt, W);
}

/* re-embed a character as a covector (Witt sum of its parts) */
inline CoVector to_covector(const Character& c) {
  const FieldCtx* k = c.k;
  WittCtx W(k);
  int len = (int)c.constant.size();
  for (auto& [n, cm] : c.wild) len = std::max(len, cm.m + 1);
  len = std::max(len, 1);
  CoVector acc;
  acc.f.assign(len, LaurentK::zero());
  for (auto& [n, cm] : c.wild) acc.f = W.add(acc.f, detail::embed_comonomial(cm, len, k).f);
  if (!c.constant.empty()) {
    WittE cst(len, LaurentK::zero());
    int off = len - (int)c.constant.size();
    for (size_t i = 0; i < c.constant.size(); ++i)
      cst[off + i] = LaurentK::monomial(0, c.constant[i]);
    acc.f = W.add(acc.f, cst);
  }
  return acc;
}

/* class sum (tensor of rank-one characters) */
inline Character char_add(const Character& a, const Character& b) {
  if (a.k != b.k) fail(errc::bad_input, "char_add across different fields");
  const FieldCtx* k = a.k;
  WittCtx W(k);
  Character out;
  out.k = k;
  for (auto& [n, cm] : a.wild) out.wild[n] = cm;
  for (auto& [n, cm] : b.wild) {
    auto it = out.wild.find(n);
    if (it == out.wild.end()) {
      out.wild[n] = cm;
      continue;
    }
    CoMonomial x = it->second, y = cm;
    int M = std::max(x.m, y.m);
    WittK wx = x.witt, wy = y.witt;
    for (int i = x.m; i < M; ++i) wx = times_p(wx, k);
    for (int i = y.m; i < M; ++i) wy = times_p(wy, k);
    WittK mu = W.add(wx, wy);
    while (!witt_is_zero(mu) && M > 0 && in_pW(mu)) {
      mu = divide_by_p(mu);
      --M;
    }
    if (witt_is_zero(mu))
      out.wild.erase(it);
    else
      it->second = CoMonomial{n, M, std::move(mu)};
  }
  // residual parts add as Witt vectors at common length
  if (a.constant.empty()) {
    out.constant = b.constant;
  } else if (b.constant.empty()) {
    out.constant = a.constant;
  } else {
    size_t len = std::max(a.constant.size(), b.constant.size());
    WittK ca(len, KElem::zero(k)), cb(len, KElem::zero(k));
    std::copy(a.constant.begin(), a.constant.end(), ca.begin() + (len - a.constant.size()));
    std::copy(b.constant.begin(), b.constant.end(), cb.begin() + (len - b.constant.size()));
    out.constant = W.add(ca, cb);
    while (out.constant.size() > 1 && out.constant.front().is_zero())
      out.constant.erase(out.constant.begin());
    if (out.constant.size() == 1 && out.constant[0].is_zero()) out.constant.clear();
  }
  out.tame_order = std::lcm(a.tame_order, b.tame_order);
  return out;
}

inline Character char_neg(const Character& a) {
  WittCtx W(a.k);
  Character out;
  out.k = a.k;
  out.tame_order = a.tame_order;
  for (auto& [n, cm] : a.wild) out.wild[n] = CoMonomial{cm.n, cm.m, W.neg(cm.witt)};
  if (!a.constant.empty()) out.constant = W.neg(a.constant);
  return out;
}

}  // namespace swan
