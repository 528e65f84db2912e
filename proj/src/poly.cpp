#include "swan/poly.hpp"

namespace swan {

std::optional<FqPoly> fqpoly_try_divide(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  FqPoly rem = a, quot;
  const Mono& lb = b.t[0].m;
  Fq lc = b.t[0].c;
  while (!rem.is_zero()) {
    const Mono& lr = rem.t[0].m;
    if (!lr.divisible_by(lb)) return std::nullopt;
    Mono q = lr / lb;
    Fq c = rem.t[0].c / lc;
    quot.t.push_back({q, c});
    rem = rem - b.shifted(q).scaled(c);
  }
  quot.normalize();
  return quot;
}

namespace {

// pseudo-remainder of f by g in the variable `var` (both nonzero, deg_v f >= deg_v g)
FqPoly prem(FqPoly f, const FqPoly& g, int var) {
  int dg = g.deg_in(var);
  FqPoly lcg = g.coeff_of(var, dg);
  int df;
  while (!f.is_zero() && (df = f.deg_in(var)) >= dg) {
    FqPoly lcf = f.coeff_of(var, df);
    Mono shift = Mono::var(var, df - dg);
    f = f * lcg - g.shifted(shift) * lcf;
    // guard: the var^df coefficient must be gone
  }
  return f;
}

// gcd of the list of var-coefficients (polynomials without `var`)
FqPoly content_in(const FqPoly& f, int var) {
  FqPoly c;
  int d = f.deg_in(var);
  for (int i = 0; i <= d; ++i) {
    FqPoly ci = f.coeff_of(var, i);
    if (ci.is_zero()) continue;
    c = c.is_zero() ? ci : fqpoly_gcd(c, ci);
    if (c.is_constant()) break;
  }
  return fqpoly_monic(c);
}

// univariate gcd over the field F_q (fast path)
FqPoly gcd_univar(FqPoly a, FqPoly b, int var) {
  while (!b.is_zero()) {
    // a mod b
    int db = b.deg_in(var);
    Fq lc = b.coeff_of(var, db).t[0].c;
    while (!a.is_zero() && a.deg_in(var) >= db) {
      int da = a.deg_in(var);
      Fq ca = a.coeff_of(var, da).t[0].c / lc;
      a = a - b.shifted(Mono::var(var, da - db)).scaled(ca);
    }
    std::swap(a, b);
  }
  return fqpoly_monic(a);
}

bool pure_univar(const FqPoly& f, int var) {
  for (auto& tm : f.t)
    for (int i = 0; i < kMaxVars; ++i)
      if (i != var && tm.m.e[i]) return false;
  return true;
}

}  // namespace

FqPoly fqpoly_gcd(FqPoly a, FqPoly b) {
  if (a.is_zero()) return fqpoly_monic(b);
  if (b.is_zero()) return fqpoly_monic(a);
  int va = a.top_var(), vb = b.top_var();
  int var = std::max(va, vb);
  if (var < 0) return fqpoly_one(a.t[0].c.k);  // both constants
  if (!a.uses_var(var) || !b.uses_var(var)) {
    // one side is "constant" w.r.t. the main variable: gcd divides its content
    const FqPoly& cst = a.uses_var(var) ? b : a;
    const FqPoly& oth = a.uses_var(var) ? a : b;
    return fqpoly_gcd(cst, content_in(oth, var));
  }
  if (pure_univar(a, var) && pure_univar(b, var)) return gcd_univar(a, b, var);

  FqPoly ca = content_in(a, var), cb = content_in(b, var);
  FqPoly cont = fqpoly_gcd(ca, cb);
  FqPoly f = *fqpoly_try_divide(a, ca);
  FqPoly g = *fqpoly_try_divide(b, cb);
  if (f.deg_in(var) < g.deg_in(var)) std::swap(f, g);
  while (!g.is_zero()) {
    FqPoly rem = prem(f, g, var);
    f = g;
    if (rem.is_zero()) {
      g = rem;
    } else {
      FqPoly cr = content_in(rem, var);
      g = *fqpoly_try_divide(rem, cr);
    }
  }
  // f is primitive in var
  return fqpoly_monic(cont * f);
}

}  // namespace swan
