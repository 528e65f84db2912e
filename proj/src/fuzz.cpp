#include "swan/fuzz.hpp"

#include <atomic>
#include <thread>

#include "swan/parse.hpp"

namespace swan {

Fq random_fq(Rng& rng, const FieldCtx* k, bool nonzero) {
  int v = (int)rng.below(k->q);
  if (nonzero && v == 0) v = 1 + (int)rng.below(k->q - 1);
  return Fq(k, v);
}

FqPoly random_fqpoly(Rng& rng, const FieldCtx* k, int max_terms, int max_deg, bool nonzero) {
  FqPoly f;
  int terms = 1 + (int)rng.below(max_terms);
  for (int i = 0; i < terms; ++i) {
    Mono m;
    for (int v = 0; v < k->r; ++v) m.e[v] = (uint16_t)rng.below(max_deg + 1);
    f.t.push_back({m, random_fq(rng, k)});
  }
  f.normalize();
  if (nonzero && f.is_zero()) f = f + FqPoly::constant(fq_one(k));
  return f;
}

KElem random_kelem(Rng& rng, const FieldCtx* k, int max_terms, int max_deg, bool allow_fraction,
                   bool nonzero) {
  FqPoly num = random_fqpoly(rng, k, max_terms, max_deg, nonzero);
  if (allow_fraction && rng.below(4) == 0) {
    FqPoly den = random_fqpoly(rng, k, 2, 2, true);
    return KElem::make(num, den);
  }
  return KElem::make(num, fqpoly_one(k));
}

WittK random_witt(Rng& rng, const FieldCtx* k, int len, int max_terms, int max_deg) {
  WittK w;
  for (int i = 0; i < len; ++i) w.push_back(random_kelem(rng, k, max_terms, max_deg));
  return w;
}

WittK random_witt_not_pW(Rng& rng, const FieldCtx* k, int m) {
  for (int tries = 0; tries < 64; ++tries) {
    WittK w = random_witt(rng, k, m + 1);
    if (!witt_is_zero(w) && !in_pW(w)) return w;
  }
  // force purity through the 0-th coordinate
  WittK w(m + 1, KElem::zero(k));
  w[0] = KElem::one(k);
  return w;
}

Character random_character(Rng& rng, const FieldCtx* k, const FuzzBounds& b) {
  Character ch;
  ch.k = k;
  int count = 1 + (int)rng.below(b.max_comonomials);
  for (int i = 0; i < count; ++i) {
    long n = 1 + (long)rng.below(b.max_n);
    while (n % k->p == 0) ++n;
    int m = (int)rng.below(b.max_m + 1);
    WittK w;
    if (k->p >= 5 && m >= 2) {
      // large p and depth: keep coefficients monomial so the universal
      // polynomial exponents (up to p^m) stay affordable at desk scale
      for (int tries = 0;; ++tries) {
        w.clear();
        for (int j = 0; j <= m; ++j) {
          FqPoly num = random_fqpoly(rng, k, 1, 2);
          FqPoly den = rng.below(4) == 0 ? random_fqpoly(rng, k, 1, 1, true) : fqpoly_one(k);
          w.push_back(KElem::make(num, den));
        }
        if ((!witt_is_zero(w) && !in_pW(w)) || tries > 32) break;
      }
      if (witt_is_zero(w) || in_pW(w)) {
        w.assign(m + 1, KElem::zero(k));
        w[0] = KElem::var(k, 0);
      }
    } else {
      w = random_witt_not_pW(rng, k, m);
    }
    ch.wild[n] = CoMonomial{n, m, std::move(w)};
  }
  if (rng.coin()) ch.constant = {random_kelem(rng, k)};
  if (rng.coin()) {
    long N = 1 + (long)rng.below(6);
    while (N % k->p == 0) ++N;
    ch.tame_order = N;
  }
  return ch;
}

CoVector random_covector(Rng& rng, const FieldCtx* k, const FuzzBounds& b) {
  // a random character, re-embedded and blurred by an (F-1) coboundary,
  // which leaves the class unchanged
  Character ch = random_character(rng, k, b);
  CoVector cov = to_covector(ch);
  if (rng.coin() && !cov.f.empty()) {
    WittCtx W(k);
    WittE y(cov.f.size(), LaurentK::zero());
    y.back() = LaurentK::monomial(-1, random_kelem(rng, k, 1, 1));
    WittE cob = W.sub(frobenius_bar(y, k->p), y);
    cov.f = W.add(cov.f, cob);
  }
  return cov;
}

namespace {

void run_shard(uint64_t seed, long lo, long hi, const FuzzBounds& bounds, FuzzReport& rep) {
  for (long i = lo; i < hi; ++i) {
    Rng rng(Rng::mix(seed, (uint64_t)i));
    int p = bounds.primes[rng.below(bounds.primes.size())];
    int r = 1 + (int)rng.below(bounds.max_r);
    const FieldCtx* k = FieldCtx::get(p, 1, r);
    Character ch = random_character(rng, k, bounds);
    // pass through a covector re-embedding + fresh minimal lifting so the
    // whole pipeline (peeling included) is on the line, not just the radii
    Character min = minimal_lifting(to_covector(ch), k);
    ConductorComparison cmp = compare_conductors(min);
    rep.conductor_histogram[cmp.sw]++;
    if (!cmp.equal) {
      rep.mismatches++;
      std::string doc = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " case=" + std::to_string(i);
      for (auto& [n, cm] : min.wild) {
        doc += " | n=" + std::to_string(n) + " m=" + std::to_string(cm.m) + " witt=[";
        for (size_t x = 0; x < cm.witt.size(); ++x)
          doc += (x ? "," : "") + to_string(cm.witt[x]);
        doc += "]";
      }
      rep.mismatch_docs.push_back(doc);
    }
  }
}

}  // namespace

FuzzReport fuzz_compare(uint64_t seed, long count, const FuzzBounds& bounds) {
  if (count < 0) fail(errc::bad_input, "negative count");
  for (int p : bounds.primes)
    if (bounds.max_m > WittRing::bound(p))
      fail(errc::bound_exceeded, "max_m exceeds the Witt bound for p = " + std::to_string(p));

  FuzzReport out;
  out.seed = seed;
  out.count = count;
  const long shard = 64;
  long nshards = (count + shard - 1) / shard;
  std::vector<FuzzReport> parts((size_t)std::max(nshards, 0L));
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
  if (workers <= 1 || nshards <= 1) {
    for (long s = 0; s < nshards; ++s)
      run_shard(seed, s * shard, std::min(count, (s + 1) * shard), bounds, parts[s]);
  } else {
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        long s;
        while ((s = next.fetch_add(1)) < nshards)
          run_shard(seed, s * shard, std::min(count, (s + 1) * shard), bounds, parts[s]);
      });
    for (auto& th : pool) th.join();
  }
  // deterministic merge in shard order
  for (auto& part : parts) {
    out.mismatches += part.mismatches;
    for (auto& d : part.mismatch_docs) out.mismatch_docs.push_back(d);
    for (auto& [sw, n] : part.conductor_histogram) out.conductor_histogram[sw] += n;
  }
  return out;
}

}  // namespace swan
