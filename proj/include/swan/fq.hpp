#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "swan/error.hpp"

namespace swan {

/* Field parameters for k = F_q(u_1..u_r), q = p^h.  F_q is F_p[g]/(ext_poly).
 * Contexts are interned and immutable; values reference them by raw pointer,
 * which stays valid for the lifetime of the process. */
class FieldCtx {
 public:
  int p = 2;
  int h = 1;
  int q = 2;
  int r = 1;
  std::vector<int> ext_poly;  // monic, degree h, coefficients in [0,p)

  static const FieldCtx* get(int p, int h, int r, std::vector<int> ext_poly = {});

  // encoded value <-> digit helpers
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long e) const;
  int pth_root(int a) const { return pow(a, q / p); }
  int frob(int a) const { return pow(a, p); }
  int from_int(long long n) const {
    long long v = n % p;
    if (v < 0) v += p;
    return (int)v;  // prime subfield sits in the low digit
  }

  std::string to_string(int a) const;

 private:
  friend struct FieldCtxFactory;
  std::vector<uint16_t> mul_table_;  // q*q when q <= 1024
  std::vector<uint16_t> inv_table_;
  std::vector<std::array<int, 8>> red_rows_;  // g^h..g^(2h-2) reduced
  void init_tables();
  int mul_raw(int a, int b) const;
};

/* An element of F_q.  The context pointer is part of the value; mixing
 * contexts is a programming error (checked with asserts in debug builds). */
struct Fq {
  const FieldCtx* k = nullptr;
  uint16_t v = 0;

  Fq() = default;
  Fq(const FieldCtx* ctx, int val) : k(ctx), v((uint16_t)val) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }

  friend bool operator==(const Fq& a, const Fq& b) { return a.v == b.v && (a.v == 0 || a.k == b.k || a.k == nullptr || b.k == nullptr); }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
};

inline Fq fq_zero(const FieldCtx* k) { return Fq(k, 0); }
inline Fq fq_one(const FieldCtx* k) { return Fq(k, 1); }

inline Fq operator+(const Fq& a, const Fq& b) { return Fq(a.k ? a.k : b.k, (a.k ? a.k : b.k)->add(a.v, b.v)); }
inline Fq operator-(const Fq& a, const Fq& b) { return Fq(a.k ? a.k : b.k, (a.k ? a.k : b.k)->sub(a.v, b.v)); }
inline Fq operator-(const Fq& a) { return Fq(a.k, a.k ? a.k->neg(a.v) : 0); }
inline Fq operator*(const Fq& a, const Fq& b) { return Fq(a.k ? a.k : b.k, (a.k ? a.k : b.k)->mul(a.v, b.v)); }
inline Fq fq_inv(const Fq& a) {
  if (a.is_zero()) fail(errc::division_by_zero, "inverse of 0 in F_q");
  return Fq(a.k, a.k->inv(a.v));
}
inline Fq operator/(const Fq& a, const Fq& b) { return a * fq_inv(b); }
inline Fq fq_pow(const Fq& a, long long e) { return Fq(a.k, a.k->pow(a.v, e)); }
inline Fq fq_pth_root(const Fq& a) { return Fq(a.k, a.k->pth_root(a.v)); }
inline Fq fq_frob(const Fq& a) { return Fq(a.k, a.k->frob(a.v)); }

}  // namespace swan
