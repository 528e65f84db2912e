#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swan/fuzz.hpp"
#include "swan/witt.hpp"

using namespace swan;

static const FieldCtx* k2 = FieldCtx::get(2, 1, 2);
static const FieldCtx* k3 = FieldCtx::get(3, 1, 1);

// independent oracle: random integer evaluation of the ghost identity
static ZPoly zvar(int slot) { return ZPoly::monomial(Mono::var(slot), 1); }

TEST_CASE("universal polynomials: frozen low levels") {
  // derived by running the ghost recursion by hand:
  //   S_0 = X0+Y0, and for p=2: S_1 = X1+Y1-X0 Y0
  const WittRing& W2 = WittRing::get(2, 1);
  ZPoly s1_expected = zvar(1) + zvar(kWittYBase + 1) - zvar(0) * zvar(kWittYBase);
  CHECK(W2.S(0) == zvar(0) + zvar(kWittYBase));
  CHECK(W2.S(1) == s1_expected);
  // p=3: S_1 = X1+Y1-X0^2 Y0 - X0 Y0^2
  const WittRing& W3 = WittRing::get(3, 1);
  ZPoly s1_3 = zvar(1) + zvar(kWittYBase + 1) -
               ZPoly::monomial(Mono::var(0, 2) * Mono::var(kWittYBase), 1) -
               ZPoly::monomial(Mono::var(0) * Mono::var(kWittYBase, 2), 1);
  CHECK(W3.S(1) == s1_3);
  CHECK_THROWS_AS(WittRing::get(5, 3), conductor_error);  // bound for p >= 5 is 2
}

TEST_CASE("ghost identity over Z for the supported (p,m) table") {
  // the ghost map linearizes Witt arithmetic over characteristic zero;
  // evaluate both routes on random small integer vectors
  Rng rng(101);
  const std::pair<int, int> table[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};
  for (auto [p, m] : table) {
    for (int rep = 0; rep < 6; ++rep) {
      WittZ a, b;
      for (int i = 0; i <= m; ++i) {
        a.push_back(ZPoly::constant(cpp_int(rng.between(-9, 9))));
        b.push_back(ZPoly::constant(cpp_int(rng.between(-9, 9))));
      }
      auto ga = ghost_components(a, p), gb = ghost_components(b, p);
      auto gsum = ghost_components(witt_add_z(a, b, p), p);
      auto gprod = ghost_components(witt_mul_z(a, b, p), p);
      auto gneg = ghost_components(witt_neg_z(a, p), p);
      for (int j = 0; j <= m; ++j) {
        CHECK(gsum[j] == ga[j] + gb[j]);
        CHECK(gprod[j] == ga[j] * gb[j]);
        CHECK(gneg[j] == -ga[j]);
      }
    }
  }
}

TEST_CASE("ghost identity on symbolic lifts") {
  // two symbolic variables; checks the polynomial identity itself
  for (int p : {2, 3}) {
    WittZ a{zvar(8), ZPoly::constant(cpp_int(1))};
    WittZ b{zvar(9), zvar(8)};
    auto ga = ghost_components(a, p), gb = ghost_components(b, p);
    auto gsum = ghost_components(witt_add_z(a, b, p), p);
    for (int j = 0; j <= 1; ++j) CHECK(gsum[j] == ga[j] + gb[j]);
  }
}

TEST_CASE("ghost components examples") {
  WittZ a{ZPoly::constant(cpp_int(1)), ZPoly::constant(cpp_int(0))};
  auto g = ghost_components(a, 2);
  CHECK(g[0] == ZPoly::constant(cpp_int(1)));
  CHECK(g[1] == ZPoly::constant(cpp_int(1)));
  WittZ b{ZPoly::constant(cpp_int(0)), ZPoly::constant(cpp_int(1))};
  auto gb = ghost_components(b, 2);
  CHECK(gb[0].is_zero());
  CHECK(gb[1] == ZPoly::constant(cpp_int(2)));
  WittZ c{zvar(0), zvar(1)};  // <x, x^2+2y>
  auto gc = ghost_components(c, 2);
  CHECK(gc[1] == ZPoly::monomial(Mono::var(0, 2), 1) + zvar(1).scaled(cpp_int(2)));
}

TEST_CASE("witt ring axioms over k") {
  WittCtx W(k2);
  KElem u1 = KElem::var(k2, 0), u2 = KElem::var(k2, 1);
  SUBCASE("frozen example") {
    WittK one{KElem::one(k2), KElem::zero(k2)};
    WittK s = W.add(one, one);
    CHECK(s[0].is_zero());
    CHECK(s[1].is_one());
  }
  SUBCASE("identity and W_0") {
    WittK x{u1, u2};
    WittK zero{KElem::zero(k2), KElem::zero(k2)};
    CHECK(W.add(x, zero) == x);
    WittK prod = W.mul(WittK{u1}, WittK{u2});
    CHECK(prod[0] == u1 * u2);
  }
  SUBCASE("random axioms m <= 2") {
    Rng rng(41);
    for (int rep = 0; rep < 12; ++rep) {
      const FieldCtx* k = rep % 2 ? k2 : k3;
      WittCtx Wk(k);
      int m = 1 + (int)rng.below(2);
      WittK a = random_witt(rng, k, m + 1), b = random_witt(rng, k, m + 1),
            c = random_witt(rng, k, m + 1);
      CHECK(Wk.add(a, b) == Wk.add(b, a));
      CHECK(Wk.add(Wk.add(a, b), c) == Wk.add(a, Wk.add(b, c)));
      CHECK(Wk.mul(Wk.mul(a, b), c) == Wk.mul(a, Wk.mul(b, c)));
      CHECK(Wk.mul(a, Wk.add(b, c)) == Wk.add(Wk.mul(a, b), Wk.mul(a, c)));
      CHECK(witt_is_zero(Wk.add(a, Wk.neg(a))));
    }
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(W.add(WittK{u1}, WittK{u1, u2}), conductor_error);
  }
}

TEST_CASE("structure maps") {
  KElem u1 = KElem::var(k2, 0), u2 = KElem::var(k2, 1);
  WittK a{u1};
  CHECK(verschiebung(a, KElem::zero(k2)) == WittK{KElem::zero(k2), u1});
  WittK f = frobenius_bar(WittK{u1, u2});
  CHECK(f == WittK{u1 * u1, u2 * u2});
  WittK tp = times_p(WittK{KElem::one(k2), KElem::zero(k2)}, k2);
  CHECK(tp == WittK{KElem::zero(k2), KElem::one(k2), KElem::zero(k2)});
}

TEST_CASE("pW membership and division") {
  KElem u1 = KElem::var(k2, 0);
  WittK a{KElem::zero(k2), u1 * u1};
  CHECK(in_pW(a));
  CHECK(divide_by_p(a) == WittK{u1});
  CHECK_FALSE(in_pW(WittK{KElem::zero(k2), u1}));
  CHECK_FALSE(in_pW(WittK{u1, KElem::zero(k2)}));
  CHECK_THROWS_AS(divide_by_p(WittK{u1}), conductor_error);

  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const FieldCtx* k = rep % 2 ? k2 : k3;
    WittK w = random_witt(rng, k, 2);
    WittK pw = times_p(w, k);
    CHECK(in_pW(pw));
    CHECK(times_p(divide_by_p(pw), k) == pw);
  }
}

TEST_CASE("kato valuation") {
  const FieldCtx* k = k2;
  KElem u1 = KElem::var(k, 0);
  WittE a{LaurentK::monomial(-1, KElem::one(k)), LaurentK::monomial(-1, KElem::one(k))};
  CHECK(kato_valuation(a, 2) == -2);
  CHECK(kato_valuation(WittE{LaurentK::zero(), LaurentK::zero()}, 2) == kValInf);
  WittE b{LaurentK::monomial(1, u1), LaurentK::monomial(-3, u1)};
  CHECK(kato_valuation(b, 2) == -3);

  Rng rng(77);
  WittCtx W(k);
  for (int rep = 0; rep < 20; ++rep) {
    WittE x(2), y(2);
    for (int i = 0; i < 2; ++i) {
      x[i] = LaurentK::monomial(rng.between(-4, 2), random_kelem(rng, k, 1, 1));
      y[i] = LaurentK::monomial(rng.between(-4, 2), random_kelem(rng, k, 1, 1));
    }
    long vx = kato_valuation(x, 2), vy = kato_valuation(y, 2);
    // v(V a) = v(a), v(F a) = p v(a)
    CHECK(kato_valuation(verschiebung(x, LaurentK::zero()), 2) == vx);
    if (vx != kValInf) CHECK(kato_valuation(frobenius_bar(x, 2), 2) == 2 * vx);
    long vsum = kato_valuation(W.add(x, y), 2);
    CHECK(vsum >= std::min(vx, vy));
    long vprod = kato_valuation(W.mul(x, y), 2);
    if (vx != kValInf && vy != kValInf) CHECK(vprod >= vx + vy);
  }
}

TEST_CASE("canonical representative mod pW") {
  WittCtx W(k2);
  KElem u1 = KElem::var(k2, 0), u2 = KElem::var(k2, 1);
  SUBCASE("strips the k^p part of higher coordinates") {
    WittK a{u1, u2 * u2};
    CHECK(canonical_mod_p(a, W) == WittK{u1, KElem::zero(k2)});
    WittK b{KElem::zero(k2), u1 * u1 + u1};
    CHECK(canonical_mod_p(b, W) == WittK{KElem::zero(k2), u1});
  }
  SUBCASE("fixpoint on canonical input") {
    WittK a{u1 * u1, u1};
    CHECK(canonical_mod_p(a, W) == a);
  }
  SUBCASE("difference lies in pW, higher coordinates land in k'") {
    Rng rng(9);
    for (int rep = 0; rep < 15; ++rep) {
      const FieldCtx* k = rep % 2 ? k2 : k3;
      WittCtx Wk(k);
      WittK a = random_witt(rng, k, 3);
      WittK c = canonical_mod_p(a, Wk);
      CHECK(c[0] == a[0]);
      WittK diff = Wk.sub(c, a);
      CHECK(in_pW(diff));
      for (size_t j = 1; j < c.size(); ++j) {
        auto e = pbasis_expand(c[j]);
        CHECK(e.find(PIndex(k->r, 0)) == e.end());
      }
    }
  }
}

TEST_CASE("cache round trip") {
  // the rings are cached on disk; a second lookup must agree
  const WittRing& a = WittRing::get(2, 2);
  const WittRing& b = WittRing::get(2, 2);
  CHECK(&a == &b);
  CHECK(a.S(2).nterms() > 0);
}
