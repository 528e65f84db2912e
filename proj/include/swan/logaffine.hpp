#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "swan/error.hpp"

namespace swan {

using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline double rat_dbl(const Rat& x) { return (double)numerator(x) / (double)denominator(x); }

struct AffinePiece {
  Rat slope, icpt;
  Rat at(const Rat& r) const { return slope * r + icpt; }
};

/* Piecewise log-affine function of r = log_p(rho), as a min- or
 * max-envelope of affine pieces over an r-interval.  Everything exact. */
struct LogAffine {
  enum Kind { Min, Max };
  Kind kind = Min;
  std::vector<AffinePiece> pieces;
  std::optional<Rat> lo, hi;  // nullopt = unbounded

  bool in_domain(const Rat& r) const {
    if (lo && r < *lo) return false;
    if (hi && r > *hi) return false;
    return true;
  }

  Rat value(const Rat& r) const {
    if (pieces.empty()) fail(errc::zero_element, "empty envelope");
    Rat best = pieces[0].at(r);
    for (size_t i = 1; i < pieces.size(); ++i) {
      Rat v = pieces[i].at(r);
      if (kind == Min ? v < best : v > best) best = v;
    }
    return best;
  }

  /* Essential pieces on the domain, ordered left-to-right by activity
   * (descending slope for Min, ascending for Max). */
  std::vector<AffinePiece> reduced() const {
    if (pieces.empty()) return {};
    // dedupe by slope
    std::vector<AffinePiece> ps = pieces;
    std::sort(ps.begin(), ps.end(), [&](const AffinePiece& a, const AffinePiece& b) {
      if (a.slope != b.slope) return a.slope < b.slope;
      return kind == Min ? a.icpt < b.icpt : a.icpt > b.icpt;
    });
    std::vector<AffinePiece> uniq;
    for (auto& pc : ps)
      if (uniq.empty() || uniq.back().slope != pc.slope) uniq.push_back(pc);

    // envelope over all of R: for Min, activity runs from the largest slope
    // (r -> -inf) down to the smallest (r -> +inf)
    if (kind == Min) std::reverse(uniq.begin(), uniq.end());
    // for Max: ascending slope order is the left-to-right activity order
    std::vector<AffinePiece> hull;
    auto cross = [&](const AffinePiece& a, const AffinePiece& b) -> Rat {
      return (b.icpt - a.icpt) / (a.slope - b.slope);
    };
    for (auto& pc : uniq) {
      while (hull.size() >= 2) {
        // pc starts being active at cross(hull.back(), pc); if that is not
        // to the right of where hull.back() became active, back() is useless
        Rat x_new = cross(hull.back(), pc);
        Rat x_old = cross(hull[hull.size() - 2], hull.back());
        if (x_new <= x_old)
          hull.pop_back();
        else
          break;
      }
      if (hull.size() == 1) {
        // piece with equal value everywhere cannot happen (slopes distinct)
        Rat x_new = cross(hull.back(), pc);
        (void)x_new;
      }
      hull.push_back(pc);
    }
    // clip to the domain; a piece active only at a single endpoint ties with
    // its neighbour there and is dropped (value-preserving)
    std::vector<AffinePiece> out;
    for (size_t i = 0; i < hull.size(); ++i) {
      // active on [x_{i-1}, x_i]
      std::optional<Rat> a, b;
      if (i > 0) a = cross(hull[i - 1], hull[i]);
      if (i + 1 < hull.size()) b = cross(hull[i], hull[i + 1]);
      bool dead = false;
      if (lo && b && (*b < *lo || (*b == *lo && i + 1 < hull.size()))) dead = true;
      if (hi && a && (*a > *hi || (*a == *hi && i > 0))) dead = true;
      if (!dead) out.push_back(hull[i]);
    }
    return out;
  }

  std::vector<Rat> breakpoints() const {
    auto red = reduced();
    std::vector<Rat> out;
    for (size_t i = 0; i + 1 < red.size(); ++i)
      out.push_back((red[i + 1].icpt - red[i].icpt) / (red[i].slope - red[i + 1].slope));
    return out;
  }

  // slope of the active piece at the right end of the domain
  Rat slope_right() const {
    auto red = reduced();
    if (red.empty()) fail(errc::zero_element, "empty envelope");
    return red.back().slope;
  }
  // slope of the active piece at the left end of the domain
  Rat slope_left() const {
    auto red = reduced();
    if (red.empty()) fail(errc::zero_element, "empty envelope");
    return red.front().slope;
  }

  // does the envelope equal the single line slope*r + icpt on its domain?
  bool is_single_line(const Rat& slope, const Rat& icpt) const {
    auto red = reduced();
    return red.size() == 1 && red[0].slope == slope && red[0].icpt == icpt;
  }

  /* Minimum of the envelope over the closed domain (for Max envelopes this
   * is the quantity convexity puts at a vertex or an end).  Returns nullopt
   * if unbounded below.  Also reports whether the minimum is attained only
   * at domain endpoints. */
  struct MinInfo {
    std::optional<Rat> min;  // nullopt: -inf
    bool interior = false;   // attained somewhere strictly inside
  };
  MinInfo min_on_domain() const {
    auto red = reduced();
    if (red.empty()) fail(errc::zero_element, "empty envelope");
    MinInfo info;
    if (kind == Max) {
      // convex; the left-active piece has the smallest slope
      if (!lo && red.front().slope > 0) return info;  // -inf toward the left
      if (!hi && red.back().slope < 0) return info;   // -inf toward the right
      std::vector<Rat> cand;
      if (lo) cand.push_back(*lo);
      if (hi) cand.push_back(*hi);
      for (auto& b : breakpoints())
        if (in_domain(b)) cand.push_back(b);
      if (cand.empty()) {  // single flat line on all of R
        info.min = red[0].icpt;
        info.interior = true;
        return info;
      }
      Rat best = value(cand[0]);
      for (auto& x : cand) best = std::min(best, value(x));
      info.min = best;
      for (auto& x : cand) {
        bool endpoint = (lo && x == *lo) || (hi && x == *hi);
        if (!endpoint && value(x) == best) info.interior = true;
      }
      // a flat piece active at the minimum keeps it attained in the interior
      for (auto& pc : red)
        if (pc.slope == 0 && pc.icpt == best) info.interior = true;
      return info;
    }
    // Min envelope is concave; over a closed domain the minimum sits at an
    // end (or a limit toward an infinite end).
    if (!lo && red.front().slope > 0) return info;
    if (!hi && red.back().slope < 0) return info;
    std::optional<Rat> best;
    auto consider = [&](const Rat& v) {
      if (!best || v < *best) best = v;
    };
    if (lo) consider(value(*lo));
    else if (red.front().slope == 0) consider(red.front().icpt);
    if (hi) consider(value(*hi));
    else if (red.back().slope == 0) consider(red.back().icpt);
    info.min = best;
    return info;
  }
};

}  // namespace swan
