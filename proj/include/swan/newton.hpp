#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "swan/logaffine.hpp"

namespace swan {

/* Newton polygon of a differential operator sum g_k (d/dT)^k, built from
 * the T-adic valuations of the coefficients.  Infinite valuation (g_k = 0)
 * is a missing point. */
struct NewtonPolygon {
  std::vector<std::pair<Rat, Rat>> vertices;  // lower convex hull, x increasing
};

using OpValuations = std::vector<std::optional<long>>;  // v_T(g_0)..v_T(g_n); nullopt = +inf

inline void check_operator(const OpValuations& v) {
  if (v.empty()) fail(errc::degenerate_operator, "empty operator");
  if (!v.back()) fail(errc::degenerate_operator, "leading coefficient g_n = 0");
}

/* hull of { (k, (v_k - k) - (v_n - n)) }; the conventional extra points
 * (-inf, 0) and (0, +inf) only wall off the left side and stay implicit. */
inline NewtonPolygon newton_polygon(const OpValuations& v) {
  check_operator(v);
  long n = (long)v.size() - 1;
  long base = *v.back() - n;
  std::vector<std::pair<Rat, Rat>> pts;
  for (long k = 0; k <= n; ++k)
    if (v[k]) pts.emplace_back(Rat(k), Rat((*v[k] - k) - base));
  // lower hull, points already sorted by x (distinct)
  std::vector<std::pair<Rat, Rat>> hull;
  for (auto& pt : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // drop b if it is above or on segment a->pt
      if ((b.second - a.second) * (pt.first - a.first) >=
          (pt.second - a.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  return NewtonPolygon{hull};
}

inline long formal_irregularity(const OpValuations& v) {
  check_operator(v);
  long n = (long)v.size() - 1;
  long best = LONG_MIN;
  for (long k = 0; k <= n; ++k)
    if (v[k]) best = std::max(best, k - *v[k]);
  return best - (n - *v.back());
}

inline Rat formal_slope(const OpValuations& v) {
  check_operator(v);
  long n = (long)v.size() - 1;
  Rat best = 0;
  for (long k = 0; k < n; ++k) {
    if (!v[k]) continue;
    Rat cand = Rat(*v.back() - *v[k], n - k) - 1;
    if (cand > best) best = cand;
  }
  return best;
}

}  // namespace swan
