#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "swan/error.hpp"
#include "swan/logaffine.hpp"

namespace swan {

using cpp_int = boost::multiprecision::cpp_int;

/* Q(zeta_{p^(m+1)}) presented on the power basis of pi = zeta - 1, modulo
 * the minimal polynomial Phi_{p^(m+1)}(1 + X).  All coefficients are exact
 * rationals. */
class CycloCtx {
 public:
  int p = 2, m = 0;
  int deg = 1;                    // p^m (p-1)
  std::vector<cpp_int> minpoly;   // monic, integer, size deg+1

  static int degree_bound();
  static void set_degree_bound(int b);
  static const CycloCtx* get(int p, int m);

  const std::vector<std::vector<Rat>>& red_rows() const { return red_rows_; }
  const std::vector<Rat>& pi_inv() const { return pi_inv_; }

 private:
  friend struct CycloCtxFactory;
  std::vector<std::vector<Rat>> red_rows_;  // X^(deg+j) reduced, j = 0..deg-2
  std::vector<Rat> pi_inv_;
};

struct CycloElem {
  const CycloCtx* cx = nullptr;
  std::vector<Rat> c;  // size cx->deg

  CycloElem() = default;
  explicit CycloElem(const CycloCtx* ctx) : cx(ctx), c(ctx->deg, Rat(0)) {}
  static CycloElem from_rat(const CycloCtx* ctx, const Rat& x) {
    CycloElem e(ctx);
    e.c[0] = x;
    return e;
  }
  static CycloElem pi(const CycloCtx* ctx) {
    CycloElem e(ctx);
    if (ctx->deg == 1) {
      e.c[0] = -Rat(ctx->minpoly[0]);  // p = 2, m = 0: pi = zeta_2 - 1 = -2
    } else {
      e.c[1] = 1;
    }
    return e;
  }

  bool is_zero() const {
    for (auto& x : c)
      if (x != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c.empty() || c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return false;
    return true;
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.c == b.c; }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    CycloElem out = a.cx ? a : b;
    if (a.cx && b.cx)
      for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
  }
  friend CycloElem operator-(const CycloElem& a) {
    CycloElem out = a;
    for (auto& x : out.c) x = -x;
    return out;
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);

  CycloElem scaled(const Rat& x) const {
    CycloElem out = *this;
    for (auto& y : out.c) y = y * x;
    return out;
  }
};

CycloElem cyclo_inv(const CycloElem& a);
CycloElem cyclo_pow(const CycloElem& a, long e);
Rat cyclo_norm(const CycloElem& a);

/* exact p-adic valuation (normalized v_p(p) = 1); nullopt for 0 */
std::optional<Rat> cyclo_vp(const CycloElem& a);

/* pi_0..pi_m with pi_j = (1+pi)^(p^(m-j)) - 1; [p](pi_{j+1}) = pi_j holds
 * exactly and v_p(pi_j) = 1/(p^j(p-1)) is verified through the norm. */
struct PiTower {
  const CycloCtx* cx = nullptr;
  std::vector<CycloElem> pi;  // index j = 0..m

  static PiTower make(int p, int m);
};

}  // namespace swan
