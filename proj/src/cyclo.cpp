#include "swan/cyclo.hpp"

#include <atomic>
#include <map>
#include <mutex>

namespace swan {

namespace {

std::atomic<int> g_degree_bound{64};

// polynomial helpers over Q (dense, little endian)
using QPoly = std::vector<Rat>;

int qdeg(const QPoly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

QPoly qtrim(QPoly f) {
  f.resize(qdeg(f) + 1);
  return f;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return qtrim(c);
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return qtrim(a);
}

// a mod b, b nonzero
QPoly qmod(QPoly a, const QPoly& b) {
  int db = qdeg(b);
  Rat lb = b[db];
  while (qdeg(a) >= db) {
    int da = qdeg(a);
    Rat c = a[da] / lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    a = qtrim(a);
  }
  return a;
}

// extended euclid: g = gcd, and s with s*a = g mod b
void qextgcd(QPoly a, QPoly b, QPoly& g, QPoly& s_out) {
  QPoly s0{Rat(1)}, s1{};
  while (qdeg(b) >= 0) {
    // quotient of a by b
    QPoly q(std::max(0, qdeg(a) - qdeg(b) + 1), Rat(0));
    QPoly rem = a;
    int db = qdeg(b);
    Rat lb = b[db];
    while (qdeg(rem) >= db) {
      int dr = qdeg(rem);
      Rat c = rem[dr] / lb;
      q[dr - db] += c;
      for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
      rem = qtrim(rem);
    }
    QPoly s2 = qsub(s0, qmul(q, s1));
    a = b;
    b = rem;
    s0 = s1;
    s1 = s2;
  }
  g = a;
  s_out = s0;
}

Rat qresultant(QPoly a, QPoly b) {
  // res(a, b) with a monic: product of b over the roots of a
  int da = qdeg(a), db = qdeg(b);
  if (da < 0 || db < 0) return Rat(0);
  Rat r(1);
  bool neg = false;
  while (true) {
    db = qdeg(b);
    if (db < 0) return Rat(0);
    if (db == 0) {
      Rat acc(1);
      for (int i = 0; i < qdeg(a) + 0; ++i) acc *= b[0];
      // b constant: res = b0^deg(a)
      Rat out = r * acc;
      return neg ? -out : out;
    }
    QPoly rem = qmod(a, b);
    int dr = qdeg(rem);
    Rat lb = b[db];
    // res(a,b) = (-1)^(da*db) lb^(da-dr) res(b, rem)
    int da_cur = qdeg(a);
    if ((da_cur % 2) && (db % 2)) neg = !neg;
    Rat lpow(1);
    for (int i = 0; i < da_cur - (dr < 0 ? 0 : dr); ++i) lpow *= lb;
    r *= lpow;
    if (dr < 0) return Rat(0);
    a = b;
    b = rem;
  }
}

struct Key {
  int p, m;
  bool operator<(const Key& o) const { return p != o.p ? p < o.p : m < o.m; }
};

}  // namespace

struct CycloCtxFactory {
  static const CycloCtx* make(int p, int m) {
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<CycloCtx>> registry;
    std::lock_guard<std::mutex> lk(mu);
    auto it = registry.find({p, m});
    if (it != registry.end()) return it->second.get();

    long pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    long deg = pm * (p - 1);
    if (deg > g_degree_bound.load())
      fail(errc::bound_exceeded, "cyclotomic degree p^m(p-1) exceeds the configured bound");

    auto cx = std::make_unique<CycloCtx>();
    cx->p = p;
    cx->m = m;
    cx->deg = (int)deg;
    // Phi_{p^(m+1)}(Y) = sum_{i<p} Y^(i p^m); substitute Y = 1 + X
    std::vector<cpp_int> phi(deg + 1, 0);
    // (1+X)^(i p^m) accumulated via iterated multiplication by (1+X)^(p^m)
    std::vector<cpp_int> base(pm + 1, 0);
    {
      // (1+X)^(p^m) by binomials
      cpp_int b = 1;
      for (long j = 0; j <= pm; ++j) {
        base[j] = b;
        b = b * (pm - j) / (j + 1);
      }
    }
    std::vector<cpp_int> cur{1};
    for (int i = 0; i < p; ++i) {
      for (size_t j = 0; j < cur.size(); ++j) phi[j] += cur[j];
      if (i + 1 < p) {
        std::vector<cpp_int> nxt(cur.size() + pm, 0);
        for (size_t a = 0; a < cur.size(); ++a) {
          if (cur[a] == 0) continue;
          for (long b2 = 0; b2 <= pm; ++b2) nxt[a + b2] += cur[a] * base[b2];
        }
        cur = std::move(nxt);
      }
    }
    cx->minpoly = phi;

    // reduction rows X^(deg+j) mod minpoly
    cx->red_rows_.assign(std::max(0, cx->deg - 1), std::vector<Rat>(cx->deg, Rat(0)));
    QPoly mp(cx->minpoly.size());
    for (size_t i = 0; i < mp.size(); ++i) mp[i] = Rat(cx->minpoly[i]);
    for (int j = 0; j < cx->deg - 1; ++j) {
      QPoly x(deg + j + 1, Rat(0));
      x[deg + j] = 1;
      QPoly rem = qmod(x, mp);
      rem.resize(deg, Rat(0));
      cx->red_rows_[j] = rem;
    }

    // inverse of pi = X
    {
      QPoly g, s;
      qextgcd(QPoly{Rat(0), Rat(1)}, mp, g, s);
      if (qdeg(g) != 0) fail(errc::bad_input, "pi not invertible (impossible)");
      Rat scale = Rat(1) / g[0];
      s.resize(deg, Rat(0));
      cx->pi_inv_.assign(deg, Rat(0));
      for (int i = 0; i < deg; ++i) cx->pi_inv_[i] = s[i] * scale;
    }

    const CycloCtx* out = cx.get();
    registry.emplace(Key{p, m}, std::move(cx));
    return out;
  }
};

int CycloCtx::degree_bound() { return g_degree_bound.load(); }
void CycloCtx::set_degree_bound(int b) { g_degree_bound.store(b); }
const CycloCtx* CycloCtx::get(int p, int m) { return CycloCtxFactory::make(p, m); }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  const CycloCtx* cx = a.cx ? a.cx : b.cx;
  CycloElem out(cx);
  if (!a.cx || !b.cx) return out;
  int deg = cx->deg;
  std::vector<Rat> raw(2 * deg - 1, Rat(0));
  for (int i = 0; i < deg; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.c[j] == 0) continue;
      raw[i + j] += a.c[i] * b.c[j];
    }
  }
  for (int i = 0; i < deg; ++i) out.c[i] = raw[i];
  for (int j = 0; j < deg - 1; ++j) {
    if (raw[deg + j] == 0) continue;
    const auto& row = cx->red_rows()[j];
    for (int i = 0; i < deg; ++i) out.c[i] += raw[deg + j] * row[i];
  }
  return out;
}

CycloElem cyclo_inv(const CycloElem& a) {
  if (a.is_zero()) fail(errc::division_by_zero, "inverse of 0 in Q(zeta)");
  const CycloCtx* cx = a.cx;
  QPoly f(a.c.begin(), a.c.end());
  f = qtrim(f);
  QPoly mp(cx->minpoly.size());
  for (size_t i = 0; i < mp.size(); ++i) mp[i] = Rat(cx->minpoly[i]);
  QPoly g, s;
  qextgcd(f, mp, g, s);
  if (qdeg(g) != 0) fail(errc::division_by_zero, "non-invertible cyclotomic element");
  Rat scale = Rat(1) / g[0];
  s = qmod(s, mp);
  s.resize(cx->deg, Rat(0));
  CycloElem out(cx);
  for (int i = 0; i < cx->deg; ++i) out.c[i] = s[i] * scale;
  return out;
}

CycloElem cyclo_pow(const CycloElem& a, long e) {
  CycloElem acc = CycloElem::from_rat(a.cx, Rat(1)), base = a;
  if (e < 0) {
    base = cyclo_inv(base);
    e = -e;
  }
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Rat cyclo_norm(const CycloElem& a) {
  const CycloCtx* cx = a.cx;
  QPoly mp(cx->minpoly.size());
  for (size_t i = 0; i < mp.size(); ++i) mp[i] = Rat(cx->minpoly[i]);
  QPoly f(a.c.begin(), a.c.end());
  f = qtrim(f);
  return qresultant(mp, f);
}

std::optional<Rat> cyclo_vp(const CycloElem& a) {
  if (a.is_zero()) return std::nullopt;
  const CycloCtx* cx = a.cx;
  const int p = cx->p, deg = cx->deg;
  // clear rational content
  cpp_int lcm = 1;
  for (auto& x : a.c) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  std::vector<cpp_int> v(deg);
  for (int i = 0; i < deg; ++i) {
    Rat y = a.c[i] * Rat(lcm);
    v[i] = numerator(y);
  }
  long vp_lcm = 0;
  {
    cpp_int l = lcm;
    while (l % p == 0) {
      l /= p;
      ++vp_lcm;
    }
  }
  long k = 0;
  auto divisible_by_p = [&](const std::vector<cpp_int>& w) {
    for (auto& x : w)
      if (x % p != 0) return false;
    return true;
  };
  while (divisible_by_p(v)) {
    for (auto& x : v) x /= p;
    ++k;
  }
  // count exact pi-divisions (fewer than deg remain possible)
  long j = 0;
  std::vector<Rat> cur(v.begin(), v.end());
  const auto& piinv = cx->pi_inv();
  for (; j < deg; ++j) {
    // multiply cur by pi^{-1}
    CycloElem x(cx), pii(cx);
    x.c = cur;
    pii.c = piinv;
    CycloElem nxt = x * pii;
    bool integral = true;
    for (auto& y : nxt.c)
      if (denominator(y) != 1) {
        integral = false;
        break;
      }
    if (!integral) break;
    cur = nxt.c;
  }
  return Rat(k - vp_lcm) + Rat(j, deg);
}

PiTower PiTower::make(int p, int m) {
  const CycloCtx* cx = CycloCtx::get(p, m);
  PiTower t;
  t.cx = cx;
  CycloElem one = CycloElem::from_rat(cx, Rat(1));
  CycloElem zeta = one + CycloElem::pi(cx);
  long pw = 1;
  for (int i = 0; i < m; ++i) pw *= p;
  for (int j = 0; j <= m; ++j) {
    CycloElem pij = cyclo_pow(zeta, pw) - one;
    t.pi.push_back(pij);
    pw /= p;
  }
  // exact tower relations: (1 + pi_{j+1})^p - 1 = pi_j
  for (int j = 0; j + 1 <= m; ++j) {
    CycloElem rel = cyclo_pow(one + t.pi[j + 1], p) - one;
    if (!(rel == t.pi[j])) fail(errc::bad_input, "pi tower relation failed");
  }
  // valuation check via norms: |N(pi_j)| = p^(p^(m-j))
  long pmj = 1;
  for (int i = 0; i < m; ++i) pmj *= p;
  for (int j = 0; j <= m; ++j) {
    Rat nm = cyclo_norm(t.pi[j]);
    if (nm < 0) nm = -nm;
    cpp_int expect = 1;
    for (long i = 0; i < pmj; ++i) expect *= p;
    if (nm != Rat(expect)) fail(errc::bad_input, "pi tower norm check failed");
    pmj /= p;
  }
  return t;
}

}  // namespace swan
