#include "swan/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace swan {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// digits of a base p, little endian, h slots
std::array<int, 8> digits_of(int a, int p, int h) {
  std::array<int, 8> d{};
  for (int i = 0; i < h; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int encode(const std::array<int, 8>& d, int p, int h) {
  int v = 0;
  for (int i = h - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// multiply two F_p[x] polynomials of degree < h, coefficients as digit arrays
std::array<int, 16> raw_mul(const std::array<int, 8>& a, const std::array<int, 8>& b, int p, int h) {
  std::array<int, 16> c{};
  for (int i = 0; i < h; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < h; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

// divide f (degree <= 2h) by monic ext, return remainder digits
std::array<int, 8> poly_mod(std::array<int, 16> f, const std::vector<int>& ext, int p, int h) {
  for (int d = 15; d >= h; --d) {
    int c = f[d];
    if (!c) continue;
    f[d] = 0;
    for (int i = 0; i < h; ++i) {
      f[d - h + i] = ((f[d - h + i] - c * ext[i]) % p + p * p) % p;
    }
  }
  std::array<int, 8> out{};
  for (int i = 0; i < h; ++i) out[i] = f[i];
  return out;
}

// trial divide a monic poly (vector of coeffs, little endian) over F_p
bool divides_poly(const std::vector<int>& d, const std::vector<int>& f, int p) {
  std::vector<int> rem = f;
  int dd = (int)d.size() - 1, fd = (int)rem.size() - 1;
  for (int k = fd; k >= dd; --k) {
    int c = rem[k];
    if (!c) continue;
    // d monic
    for (int i = 0; i <= dd; ++i)
      rem[k - dd + i] = ((rem[k - dd + i] - c * d[i]) % p + p) % p;
  }
  for (int i = 0; i < dd; ++i)
    if (rem[i]) return false;
  return true;
}

bool irreducible(const std::vector<int>& f, int p, int h) {
  if (h == 1) return true;
  // enumerate monic divisors of degree 1..h-1 (h <= 4 so this is cheap)
  for (int dd = 1; dd < h; ++dd) {
    long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<int> d(dd + 1, 0);
      long t = idx;
      for (int i = 0; i < dd; ++i) {
        d[i] = (int)(t % p);
        t /= p;
      }
      d[dd] = 1;
      if (divides_poly(d, f, p)) return false;
    }
  }
  return true;
}

struct CtxKey {
  int p, h, r;
  std::vector<int> ext;
  bool operator<(const CtxKey& o) const {
    if (p != o.p) return p < o.p;
    if (h != o.h) return h < o.h;
    if (r != o.r) return r < o.r;
    return ext < o.ext;
  }
};

}  // namespace

struct FieldCtxFactory {
  static const FieldCtx* make(int p, int h, int r, std::vector<int> ext) {
    static std::mutex mu;
    static std::map<CtxKey, std::unique_ptr<FieldCtx>> registry;

    if (!is_prime(p)) fail(errc::bad_input, "p = " + std::to_string(p) + " is not prime");
    if (h < 1 || h > 4) fail(errc::bad_input, "extension degree h must be in 1..4");
    if (r < 0 || r > 9) fail(errc::bad_input, "number of p-basis variables r must be in 0..9");
    long q = 1;
    for (int i = 0; i < h; ++i) q *= p;
    if (q > 65535) fail(errc::bad_input, "q = p^h too large");

    if (ext.empty()) {
      if (h == 1) {
        ext = {0, 1};  // identity: F_p itself
      } else {
        // search a monic irreducible of degree h
        long count = 1;
        for (int i = 0; i < h; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
          std::vector<int> f(h + 1, 0);
          long t = idx;
          for (int i = 0; i < h; ++i) {
            f[i] = (int)(t % p);
            t /= p;
          }
          f[h] = 1;
          if (irreducible(f, p, h)) {
            ext = f;
            break;
          }
        }
      }
    }
    if ((int)ext.size() != h + 1 || ext[h] != 1)
      fail(errc::bad_input, "ext_poly must be monic of degree h");
    for (int& c : ext) c = ((c % p) + p) % p;
    if (!irreducible(ext, p, h)) fail(errc::bad_input, "ext_poly is reducible");

    CtxKey key{p, h, r, ext};
    std::lock_guard<std::mutex> lk(mu);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    auto ctx = std::make_unique<FieldCtx>();
    ctx->p = p;
    ctx->h = h;
    ctx->q = (int)q;
    ctx->r = r;
    ctx->ext_poly = ext;
    ctx->init_tables();
    const FieldCtx* out = ctx.get();
    registry.emplace(std::move(key), std::move(ctx));
    return out;
  }
};

const FieldCtx* FieldCtx::get(int p, int h, int r, std::vector<int> ext_poly) {
  return FieldCtxFactory::make(p, h, r, std::move(ext_poly));
}

void FieldCtx::init_tables() {
  red_rows_.assign(h, std::array<int, 8>{});
  // rows for g^h .. g^(2h-2): g^(h+j) mod ext
  std::array<int, 16> cur{};
  cur[h] = 1;
  for (int j = 0; j < h; ++j) {
    auto red = poly_mod(cur, ext_poly, p, h);
    red_rows_[j] = red;
    // shift cur by one
    for (int i = 15; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
  }
  if ((long)q * q <= 1 << 20) {
    mul_table_.assign((size_t)q * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = a; b < q; ++b) {
        int m = mul_raw(a, b);
        mul_table_[(size_t)a * q + b] = (uint16_t)m;
        mul_table_[(size_t)b * q + a] = (uint16_t)m;
      }
    inv_table_.assign(q, 0);
    for (int a = 1; a < q; ++a) {
      // a^(q-2)
      int acc = 1, base = a;
      long e = q - 2;
      while (e) {
        if (e & 1) acc = mul_table_[(size_t)acc * q + base];
        base = mul_table_[(size_t)base * q + base];
        e >>= 1;
      }
      inv_table_[a] = (uint16_t)acc;
    }
  }
}

int FieldCtx::mul_raw(int a, int b) const {
  if (h == 1) return (a * b) % p;
  auto da = digits_of(a, p, h), db = digits_of(b, p, h);
  auto c = raw_mul(da, db, p, h);
  auto red = poly_mod(c, ext_poly, p, h);
  return encode(red, p, h);
}

int FieldCtx::add(int a, int b) const {
  if (h == 1) return (a + b) % p;
  auto da = digits_of(a, p, h), db = digits_of(b, p, h);
  for (int i = 0; i < h; ++i) da[i] = (da[i] + db[i]) % p;
  return encode(da, p, h);
}

int FieldCtx::sub(int a, int b) const {
  if (h == 1) return ((a - b) % p + p) % p;
  auto da = digits_of(a, p, h), db = digits_of(b, p, h);
  for (int i = 0; i < h; ++i) da[i] = ((da[i] - db[i]) % p + p) % p;
  return encode(da, p, h);
}

int FieldCtx::neg(int a) const { return sub(0, a); }

int FieldCtx::mul(int a, int b) const {
  if (!mul_table_.empty()) return mul_table_[(size_t)a * q + b];
  return mul_raw(a, b);
}

int FieldCtx::inv(int a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of 0 in F_q");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q - 2);
}

int FieldCtx::pow(int a, long long e) const {
  long long m = q - 1;
  if (a == 0) return e == 0 ? 1 : 0;
  e %= m;
  if (e < 0) e += m;
  int acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string FieldCtx::to_string(int a) const {
  if (h == 1) return std::to_string(a);
  auto d = digits_of(a, p, h);
  std::string s;
  for (int i = h - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(d[i]);
    } else {
      if (d[i] != 1) s += std::to_string(d[i]) + "*";
      s += (i == 1) ? "g" : "g^" + std::to_string(i);
    }
  }
  if (s.empty()) s = "0";
  if (s.find('+') != std::string::npos) s = "(" + s + ")";
  return s;
}

}  // namespace swan
