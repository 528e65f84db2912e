#pragma once

#include <map>
#include <optional>
#include <vector>

#include "swan/covector.hpp"
#include "swan/forms.hpp"
#include "swan/logaffine.hpp"
#include "swan/newton.hpp"

namespace swan {

/* Coefficient data of a Laurent series known through p-adic valuations:
 * t-degree -> (valuation, exact or only a lower bound). */
struct VLEntry {
  Rat v;
  bool exact = true;
};

struct ValuedLaurent {
  std::map<long, VLEntry> e;
  bool is_zero() const { return e.empty(); }
};

/* per direction i = 0 (T), 1..r: the connection coefficient g_1^i */
struct RankOneProfile {
  int p = 2;
  int r = 0;
  std::vector<ValuedLaurent> g;  // size r+1; empty map = direction absent
};

inline Rat omega_log(int p) { return Rat(-1, p - 1); }  // log_p of |p|^{1/(p-1)}

/* log_p |g|_rho = max_j (j r - v_j) */
inline LogAffine gauss_norm_fn(const ValuedLaurent& g,
                               std::optional<Rat> lo = std::nullopt,
                               std::optional<Rat> hi = Rat(0)) {
  if (g.is_zero()) fail(errc::zero_element, "Gauss norm of 0");
  LogAffine f;
  f.kind = LogAffine::Max;
  f.lo = lo;
  f.hi = hi;
  for (auto& [j, ent] : g.e) f.pieces.push_back({Rat(j), -ent.v});
  return f;
}

/* Small Radius value
 *   T(M,rho) = min( omega rho^{-1} / |g^0|, omega / |g^i| )
 * valid where |g^0|_rho > rho^{-1} or |g^i|_rho > 1 for some i >= 1;
 * the precondition is checked exactly on the open interval. */
inline LogAffine small_radius_T(const RankOneProfile& prof, std::optional<Rat> lo, std::optional<Rat> hi) {
  if (prof.g.empty()) fail(errc::zero_element, "empty profile");
  const Rat c = omega_log(prof.p);

  // precondition: max over the affine family > 0 on the open interval
  LogAffine cond;
  cond.kind = LogAffine::Max;
  cond.lo = lo;
  cond.hi = hi;
  for (size_t i = 0; i < prof.g.size(); ++i)
    for (auto& [j, ent] : prof.g[i].e)
      cond.pieces.push_back({Rat(j) + (i == 0 ? 1 : 0), -ent.v});
  if (cond.pieces.empty())
    fail(errc::small_radius_condition_fails, "profile has no coefficients");
  auto mi = cond.min_on_domain();
  bool ok = false;
  if (!mi.min) {
    ok = false;  // -inf somewhere inside
  } else if (*mi.min > 0) {
    ok = true;
  } else if (*mi.min == 0 && !mi.interior) {
    ok = true;  // grazes zero only at an excluded endpoint
  }
  if (!ok)
    fail(errc::small_radius_condition_fails,
         "norms too small: |g^0| <= rho^-1 and |g^i| <= 1 somewhere on the interval");

  LogAffine T;
  T.kind = LogAffine::Min;
  T.lo = lo;
  T.hi = hi;
  for (size_t i = 0; i < prof.g.size(); ++i)
    for (auto& [j, ent] : prof.g[i].e) {
      if (i == 0)
        T.pieces.push_back({Rat(-1 - j), ent.v + c});
      else
        T.pieces.push_back({Rat(-j), ent.v + c});
    }
  return T;
}

struct RadiusAtZero {
  LogAffine T;           // on (-inf, 0)
  long sw_nabla = 0;     // slope at 1^-
  std::vector<int> eps;  // per direction: 1 if |a| = omega certified
};

/* Radius from the leading coefficients:
 *   T(M,rho) = omega min( |a0|^{-1} rho^{n0-1}, |ai|^{-1} rho^{ni} ),
 * valid on all of (0,1) when some leading |a| equals omega exactly; the
 * slope at 1^- is then max(eps_0 (n0-1), eps_i ni). */
inline RadiusAtZero radius_at_zero(const RankOneProfile& prof) {
  const Rat c = omega_log(prof.p);  // = -v(omega); entries carry +v
  const Rat vomega = Rat(1, prof.p - 1);
  struct Lead {
    int dir;
    long n;  // pole order
    Rat v;
    bool exact;
  };
  std::vector<Lead> leads;
  for (size_t i = 0; i < prof.g.size(); ++i) {
    if (prof.g[i].is_zero()) continue;
    auto& [deg, ent] = *prof.g[i].e.begin();
    leads.push_back({(int)i, -deg, ent.v, ent.exact});
  }
  if (leads.empty()) fail(errc::hypothesis_violated, "all connection coefficients vanish");

  bool hyp = false;
  for (auto& l : leads) {
    if (l.dir == 0 && l.n >= 2) hyp = true;
    if (l.dir >= 1 && l.n >= 1) hyp = true;
  }
  if (!hyp)
    fail(errc::hypothesis_violated, "need a pole of order >= 2 in T or >= 1 in a u-direction");
  for (auto& l : leads)
    if (l.exact && l.v < vomega)
      fail(errc::hypothesis_violated, "leading coefficient larger than omega (not solvable)");

  RadiusAtZero out;
  out.eps.assign(prof.g.size(), 0);
  long best = -1;
  bool have_exact_omega = false;
  for (auto& l : leads) {
    long contrib = l.dir == 0 ? l.n - 1 : l.n;
    if (l.exact && l.v == vomega) {
      out.eps[l.dir] = 1;
      have_exact_omega = true;
      best = std::max(best, contrib);
    }
  }
  if (!have_exact_omega)
    fail(errc::inexact_leading,
         "no direction certified with |a| = omega; slope at 1^- undetermined");
  for (auto& l : leads) {
    long contrib = l.dir == 0 ? l.n - 1 : l.n;
    if (!l.exact && l.v <= vomega && contrib > best)
      fail(errc::inexact_leading,
           "a lower-bounded leading coefficient could raise the conductor");
  }
  out.sw_nabla = best;
  out.T.kind = LogAffine::Min;
  out.T.lo = std::nullopt;
  out.T.hi = Rat(0);
  for (auto& l : leads) {
    long slope = l.dir == 0 ? l.n - 1 : l.n;
    out.T.pieces.push_back({Rat(slope), l.v + c});
  }
  return out;
}

/* Connection-coefficient valuation profile of a pure co-monomial, from the
 * explicit wild connection matrices:
 *   g^0 has entries -n pi_{m-j} phi_j at degree -(n p^j + 1), with
 *     v = 1/(p^{m-j}(p-1)) + v_p(phi_j),  v_p(phi_j) = min{k <= j : lambda_k != 0};
 *   g^i has its leading entry pi_0 E_m at degree -n p^m, exact iff the
 *     E_m expression is nonzero in k. */
inline RankOneProfile rank_one_profile(const CoMonomial& cm, const FieldCtx* k) {
  const int p = k->p;
  if (cm.n % p == 0) fail(errc::not_pure, "co-monomial degree not prime to p");
  if (witt_is_zero(cm.witt)) fail(errc::not_pure, "zero co-monomial");
  if (in_pW(cm.witt)) fail(errc::not_pure, "co-monomial lies in pW (not a minimal lifting)");
  const int m = cm.m;

  RankOneProfile prof;
  prof.p = p;
  prof.r = k->r;
  prof.g.assign(k->r + 1, ValuedLaurent{});

  // v_p(phi_j) for the Teichmueller-naive lift
  auto s_of = [&](int j) -> std::optional<int> {
    for (int s = 0; s <= j; ++s)
      if (!cm.witt[s].is_zero()) return s;
    return std::nullopt;
  };
  long npj = cm.n;
  for (int j = 0; j <= m; ++j) {
    auto s = s_of(j);
    if (s) {
      long pmj = 1;
      for (int x = 0; x < m - j; ++x) pmj *= p;
      prof.g[0].e[-npj - 1] = VLEntry{Rat(1, pmj * (p - 1)) + Rat(*s), true};
    }
    npj *= p;
  }
  long npm = cm.n;
  for (int x = 0; x < m; ++x) npm *= p;
  for (int i = 0; i < k->r; ++i) {
    KElem em = tretretyi_E(cm.witt, i, k);
    if (!em.is_zero()) {
      prof.g[i + 1].e[-npm] = VLEntry{Rat(1, p - 1), true};
    } else {
      bool involves = false;
      for (auto& lam : cm.witt)
        if (lam.uses_var(i)) involves = true;
      if (involves) prof.g[i + 1].e[-npm] = VLEntry{Rat(1, p - 1), false};
    }
  }
  return prof;
}

/* differential Swan conductor of a minimal character */
inline long diff_swan(const Character& c) {
  long best = 0;
  for (auto& [n, cm] : c.wild) {
    RankOneProfile prof = rank_one_profile(cm, c.k);
    RadiusAtZero rz = radius_at_zero(prof);
    best = std::max(best, rz.sw_nabla);  // breaks n p^{m(n)} are pairwise distinct
  }
  return best;  // tame and residual parts contribute 0
}

struct ConductorComparison {
  long sw = 0;
  long sw_nabla = 0;
  bool equal = false;
};

inline ConductorComparison compare_conductors(const Character& c) {
  ConductorComparison out;
  out.sw = swan_conductor(c);
  out.sw_nabla = diff_swan(c);
  out.equal = out.sw == out.sw_nabla;
  return out;
}

}  // namespace swan
