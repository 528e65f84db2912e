#include "swan/witt.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unistd.h>

namespace swan {

struct WittRingAccess {
  static int& p(WittRing& r) { return r.p_; }
  static std::vector<ZPoly>& S(WittRing& r) { return r.S_; }
  static std::vector<ZPoly>& P(WittRing& r) { return r.P_; }
  static std::vector<ZPoly>& N(WittRing& r) { return r.N_; }
};

namespace {

constexpr const char* kCacheVersion = "swan-upoly-cache v1";

// ghost polynomial w_n in the variables at slots base..base+n
ZPoly ghost_poly(int p, int n, int base) {
  ZPoly acc;
  cpp_int pk = 1;
  for (int i = 0; i <= n; ++i) {
    long e = 1;
    for (int x = 0; x < n - i; ++x) e *= p;
    acc = acc + ZPoly::monomial(Mono::var(base + i, (int)e), pk);
    pk *= p;
  }
  return acc;
}

ZPoly exact_div(const ZPoly& f, const cpp_int& d) {
  ZPoly out = f;
  for (auto& tm : out.t) {
    if (tm.c % d != 0) fail(errc::bad_input, "universal polynomial recursion: inexact division");
    tm.c /= d;
  }
  return out;
}

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("CONDUCTOR_CACHE_DIR")) return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "conductor";
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "conductor";
  return std::filesystem::path(".conductor-cache");
}

std::string poly_to_line(int p, int kind_level, char kind, int n, const ZPoly& f) {
  std::ostringstream os;
  os << p << ' ' << kind_level << ' ' << kind << ' ' << n << " :";
  for (auto& tm : f.t) {
    os << ' ' << tm.c;
    for (int v = 0; v < 8; ++v) os << ' ' << tm.m.e[v];
  }
  return os.str();
}

bool line_to_poly(const std::string& line, int& p, char& kind, int& n, ZPoly& f) {
  std::istringstream is(line);
  int level;
  std::string colon;
  if (!(is >> p >> level >> kind >> n >> colon) || colon != ":") return false;
  f = ZPoly{};
  std::string cs;
  while (is >> cs) {
    ZPoly::Term tm;
    tm.c = cpp_int(cs);
    for (int v = 0; v < 8; ++v) {
      int e;
      if (!(is >> e)) return false;
      tm.m.e[v] = (uint16_t)e;
    }
    f.t.push_back(tm);
  }
  f.normalize();
  return true;
}

void compute_level(int p, int n, std::vector<ZPoly>& S, std::vector<ZPoly>& P, std::vector<ZPoly>& N) {
  if (n == 0) {
    S.push_back(ZPoly::monomial(Mono::var(0), 1) + ZPoly::monomial(Mono::var(kWittYBase), 1));
    P.push_back(ZPoly::monomial(Mono::var(0), 1) * ZPoly::monomial(Mono::var(kWittYBase), 1));
    N.push_back(ZPoly::monomial(Mono::var(0), -1));
    return;
  }
  cpp_int pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  const ZPoly wx = ghost_poly(p, n, 0), wy = ghost_poly(p, n, kWittYBase);

  auto finish = [&](ZPoly target, const std::vector<ZPoly>& prev) {
    cpp_int pi = 1;
    for (int i = 0; i < n; ++i) {
      long e = 1;
      for (int x = 0; x < n - i; ++x) e *= p;
      target = target - prev[i].pow(e).scaled(pi);
      pi *= p;
    }
    return exact_div(target, pn);
  };
  S.push_back(finish(wx + wy, S));
  P.push_back(finish(wx * wy, P));
  N.push_back(finish(-wx, N));
}

class Store {
 public:
  static Store& instance() {
    static Store s;
    return s;
  }

  int bound(int p) {
    std::lock_guard<std::mutex> lk(mu_);
    return bound_unlocked(p);
  }

  void set_bound(int p, int m) {
    if (m < 0) fail(errc::bad_input, "negative Witt length bound");
    // universal polynomial exponents are stored in 16 bits
    double pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    if (pm > 60000) fail(errc::bound_exceeded, "p^m too large for the universal-polynomial store");
    std::lock_guard<std::mutex> lk(mu_);
    if (rings_.count(p))
      fail(errc::bad_input, "Witt bound for p = " + std::to_string(p) +
                                 " must be configured before first use");
    bounds_[p] = m;
  }

  const WittRing& get(int p, int m) {
    if (m < 0) fail(errc::bad_input, "negative Witt length");
    if (m > bound(p))
      fail(errc::bound_exceeded,
           "Witt length m = " + std::to_string(m) + " exceeds the bound for p = " + std::to_string(p));
    std::lock_guard<std::mutex> lk(mu_);
    WittRing& ring = rings_[p];
    if (WittRingAccess::p(ring) == 0) {
      WittRingAccess::p(ring) = p;
      // capacity fixed up front: concurrent readers hold references into
      // these vectors, so they must never reallocate
      size_t cap = (size_t)bound_unlocked(p) + 1;
      WittRingAccess::S(ring).reserve(cap);
      WittRingAccess::P(ring).reserve(cap);
      WittRingAccess::N(ring).reserve(cap);
      load_from_disk(p, ring);
    }
    if ((int)WittRingAccess::S(ring).size() > m) return ring;
    for (int n = (int)WittRingAccess::S(ring).size(); n <= m; ++n)
      compute_level(p, n, WittRingAccess::S(ring), WittRingAccess::P(ring), WittRingAccess::N(ring));
    save_to_disk(p, ring);
    return ring;
  }

 private:
  void load_from_disk(int p, WittRing& ring) {
    auto& S = WittRingAccess::S(ring);
    auto& P = WittRingAccess::P(ring);
    auto& N = WittRingAccess::N(ring);
    const size_t cap = S.capacity();  // never exceed the reserved bound
    std::ifstream in(cache_dir() / ("upoly-p" + std::to_string(p) + ".txt"));
    if (!in) return;
    std::string header;
    if (!std::getline(in, header) || header != kCacheVersion) return;
    std::map<int, ZPoly> s, pr, ng;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      int lp, n;
      char kind;
      ZPoly f;
      if (!line_to_poly(line, lp, kind, n, f) || lp != p) return;  // stale cache: recompute
      (kind == 'S' ? s : kind == 'P' ? pr : ng)[n] = std::move(f);
    }
    for (int n = 0; (size_t)n < cap; ++n) {
      auto i1 = s.find(n), i2 = pr.find(n), i3 = ng.find(n);
      if (i1 == s.end() || i2 == pr.end() || i3 == ng.end()) break;
      S.push_back(i1->second);
      P.push_back(i2->second);
      N.push_back(i3->second);
    }
  }

  void save_to_disk(int p, const WittRing& ring) {
    std::error_code ec;
    auto dir = cache_dir();
    std::filesystem::create_directories(dir, ec);
    auto path = dir / ("upoly-p" + std::to_string(p) + ".txt");
    auto tmp = dir / ("upoly-p" + std::to_string(p) + ".txt.tmp" + std::to_string(::getpid()));
    {
      std::ofstream out(tmp);
      if (!out) return;  // cache is best effort
      out << kCacheVersion << '\n';
      for (int n = 0; n <= ring.levels(); ++n) {
        out << poly_to_line(p, n, 'S', n, ring.S(n)) << '\n';
        out << poly_to_line(p, n, 'P', n, ring.P(n)) << '\n';
        out << poly_to_line(p, n, 'N', n, ring.N(n)) << '\n';
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  int bound_unlocked(int p) {
    auto it = bounds_.find(p);
    return it != bounds_.end() ? it->second : WittRing::default_bound(p);
  }

  std::mutex mu_;
  std::map<int, WittRing> rings_;
  std::map<int, int> bounds_;
};

}  // namespace

int WittRing::bound(int p) { return Store::instance().bound(p); }
void WittRing::set_bound(int p, int m) { Store::instance().set_bound(p, m); }
const WittRing& WittRing::get(int p, int m) { return Store::instance().get(p, m); }

}  // namespace swan
