#include "swan/piexp.hpp"

namespace swan {

namespace {

CycPoly lift_fqpoly(const FqPoly& f, const LiftCtx& L) {
  const int p = L.k->p, h = L.k->h;
  CycPoly out;
  for (auto& tm : f.t) {
    // decode the F_q value into base-p digits over powers of the generator
    int v = tm.c.v;
    for (int i = 0; i < h; ++i) {
      int digit = v % p;
      v /= p;
      if (!digit) continue;
      Mono m = tm.m;
      if (i) m.e[kLiftGenSlot] = (uint16_t)(m.e[kLiftGenSlot] + i);
      out.t.push_back({m, CycloElem::from_rat(L.cyc, Rat(digit))});
    }
  }
  out.normalize();
  return out;
}

}  // namespace

UFracC lift_kelem(const KElem& a, const LiftCtx& L) {
  if (a.is_zero()) return UFracC::zero(L);
  return UFracC{lift_fqpoly(a.num, L), lift_fqpoly(a.den, L)};
}

WittLift lift_witt_monomial(const WittK& lam, long n, const LiftCtx& L) {
  WittLift out;
  long deg = -n;
  for (size_t i = 0; i < lam.size(); ++i) {
    TLaurent coord;
    if (!lam[i].is_zero()) coord.emplace(deg, lift_kelem(lam[i], L));
    out.f.push_back(std::move(coord));
    deg *= L.k->p;
  }
  return out;
}

namespace {

std::vector<TLaurent> phantoms(const WittLift& lift, const LiftCtx& L, long trunc) {
  const int p = L.k->p;
  const int m = lift.len() - 1;
  std::vector<TLaurent> phi(m + 1);
  for (int j = 0; j <= m; ++j) {
    TLaurent acc;
    cpp_int pk = 1;
    for (int i = 0; i <= j; ++i) {
      long e = 1;
      for (int x = 0; x < j - i; ++x) e *= p;
      TLaurent t = tl_pow(lift.f[i], e, L, trunc);
      t = tl_scale(t, CycloElem::from_rat(L.cyc, Rat(pk)));
      acc = tl_add(acc, t, L);
      pk *= p;
    }
    // the phantom of a vector supported in T^{-1}R[T^{-1}] has no constant term
    acc.erase(0);
    phi[j] = std::move(acc);
  }
  return phi;
}

TruncSeries exp_of(const TLaurent& A, int D, const LiftCtx& L) {
  TruncSeries E;
  E.D = D;
  E.c.assign(D + 1, UFracC::zero(L));
  E.c[0] = UFracC::one(L);
  TLaurent pw{{0, UFracC::one(L)}};
  Rat fact(1);
  for (int k = 1; k <= D; ++k) {
    pw = tl_mul(pw, A, L, D);
    fact *= k;
    for (auto& [d, x] : pw) {
      if (d > -1 || d < -D) continue;
      UFracC term = uf_scale(x, CycloElem::from_rat(L.cyc, Rat(1) / fact));
      E.c[-d] = uf_add(E.c[-d], term, L);
    }
  }
  return E;
}

void check_support(const WittLift& lift) {
  for (auto& coord : lift.f)
    for (auto& [d, x] : coord)
      if (d > -1) fail(errc::bad_input, "lift must be supported in T^{-1} R[T^{-1}]");
}

TruncSeries pi_exp_series(const WittLift& lift, int D, const LiftCtx& L) {
  check_support(lift);
  const int p = L.k->p;
  const int m = lift.len() - 1;
  if (m < 0) fail(errc::bad_input, "empty lift");
  if (L.cyc->m != m) fail(errc::bad_input, "lift length does not match the cyclotomic tower");
  PiTower tower = PiTower::make(p, m);

  auto phi = phantoms(lift, L, D);
  TLaurent A;
  cpp_int pj = 1;
  for (int j = 0; j <= m; ++j) {
    CycloElem scale = tower.pi[m - j].scaled(Rat(1) / Rat(pj));
    A = tl_add(A, tl_scale(phi[j], scale), L);
    pj *= p;
  }
  return exp_of(A, D, L);
}

}  // namespace

TruncSeries pi_exponential(const WittLift& lift, int D, const LiftCtx& L) {
  const int p = L.k->p;
  const int m = lift.len() - 1;
  TruncSeries E = pi_exp_series(lift, D, L);

  // Every coefficient must lie in pi_m O_{L_m}: v >= 1/(p^m (p-1)).
  long pm = 1;
  for (int x = 0; x < m; ++x) pm *= p;
  Rat need(1, pm * (p - 1));
  for (int i = 1; i <= D; ++i) {
    auto v = uf_vp(E.c[i]);
    if (v && *v < need)
      fail(errc::integrality_failure,
           "pi-exponential coefficient of T^-" + std::to_string(i) + " not divisible by pi_m");
  }
  return E;
}

TruncSeries theta_quotient(const WittLift& lift, int D, const LiftCtx& L) {
  check_support(lift);
  const int p = L.k->p, q = L.k->q;
  const int m = lift.len() - 1;
  if (m < 0) fail(errc::bad_input, "empty lift");

  // phi(f): T -> T^q, u -> u^q coordinatewise
  WittLift phif;
  for (auto& coord : lift.f) {
    TLaurent out;
    for (auto& [d, x] : coord) out.emplace(d * q, uf_frobq(x, q, L));
    phif.f.push_back(std::move(out));
  }
  // Witt difference over the characteristic-zero lift ring
  const WittRing& W = WittRing::get(p, m);
  TOps ops{&L};
  WPolyEval<TLaurent, TOps> evn(lift.f, {}, ops);
  std::vector<TLaurent> neg(m + 1);
  for (int n = 0; n <= m; ++n) neg[n] = evn.eval(W.N(n));
  WPolyEval<TLaurent, TOps> evs(phif.f, neg, ops);
  WittLift diff;
  for (int n = 0; n <= m; ++n) diff.f.push_back(evs.eval(W.S(n)));

  TruncSeries E = pi_exp_series(diff, D, L);
  for (int i = 1; i <= D; ++i) {
    auto v = uf_vp(E.c[i]);
    if (v && *v < 0)
      fail(errc::integrality_failure,
           "theta coefficient of T^-" + std::to_string(i) + " not p-adically integral");
  }
  return E;
}

TLaurent connection_coeffs_exact(const WittLift& lift, int direction, int D, const LiftCtx& L) {
  check_support(lift);
  const int p = L.k->p;
  const int m = lift.len() - 1;
  if (m < 0) fail(errc::bad_input, "empty lift");
  PiTower tower = PiTower::make(p, m);

  TLaurent g;
  for (int j = 0; j <= m; ++j) {
    // sum_{i<=j} f_i^{p^{j-i}-1} d(f_i)
    TLaurent inner;
    for (int i = 0; i <= j; ++i) {
      if (tl_is_zero(lift.f[i])) continue;
      long e = 1;
      for (int x = 0; x < j - i; ++x) e *= p;
      TLaurent d = direction == 0 ? tl_dT(lift.f[i], L) : tl_dvar(lift.f[i], direction - 1, L);
      if (tl_is_zero(d)) continue;
      TLaurent t = tl_mul(tl_pow(lift.f[i], e - 1, L), d, L);
      inner = tl_add(inner, t, L);
    }
    g = tl_add(g, tl_scale(inner, tower.pi[m - j]), L);
  }
  // keep exact degrees; callers truncate at -D if they need to
  (void)D;
  return g;
}

std::string cyclo_to_string(const CycloElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    std::string term;
    if (i == 0) {
      term = rat_str(a.c[i]);
    } else {
      if (a.c[i] == 1)
        term = "";
      else if (a.c[i] == -1)
        term = "-";
      else
        term = rat_str(a.c[i]) + "*";
      term += "pi";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

namespace {

std::string cp_to_string(const CycPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& tm : f.t) {
    std::string cs = cyclo_to_string(tm.c);
    bool wrap = cs.find('+') != std::string::npos || (cs.find('-') != std::string::npos && cs[0] != '-');
    std::string term = wrap ? "(" + cs + ")" : cs;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!tm.m.e[i]) continue;
      term += "*";
      term += i == kLiftGenSlot ? std::string("g") : "u" + std::to_string(i + 1);
      if (tm.m.e[i] > 1) term += "^" + std::to_string(tm.m.e[i]);
    }
    if (!first && term[0] != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

}  // namespace

std::string piexp_coeff_to_string(const UFracC& a, const LiftCtx& L) {
  (void)L;
  if (a.is_zero()) return "0";
  if (a.den_is_one()) return cp_to_string(a.num);
  return "(" + cp_to_string(a.num) + ")/(" + cp_to_string(a.den) + ")";
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b, const LiftCtx& L) {
  if (a.D != b.D) fail(errc::length_mismatch, "series order mismatch");
  TruncSeries out;
  out.D = a.D;
  out.c.assign(a.D + 1, UFracC::zero(L));
  for (int i = 0; i <= a.D; ++i)
    for (int j = 0; i + j <= a.D; ++j)
      out.c[i + j] = uf_add(out.c[i + j], uf_mul(a.c[i], b.c[j], L), L);
  return out;
}

}  // namespace swan
