#include "swan/parse.hpp"

#include <cctype>
#include <sstream>

namespace swan {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const FieldCtx* k;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error, what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000000000L) err("integer literal too large");
    }
    return neg ? -v : v;
  }

  LaurentK expr() {
    LaurentK v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  LaurentK term() {
    LaurentK v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        LaurentK d = factor();
        v = divide(v, d);
      } else {
        return v;
      }
    }
  }

  LaurentK divide(const LaurentK& a, const LaurentK& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "division by zero");
    if (b.c.size() != 1)
      err("division only by a single t-monomial or a coefficient");
    auto& [deg, coeff] = *b.c.begin();
    LaurentK out;
    for (auto& [d, x] : a.c) out.c.emplace(d - deg, x / coeff);
    return out;
  }

  LaurentK factor() {
    if (eat('-')) {
      LaurentK v = factor();
      return -v;
    }
    bool bare_u = false;
    LaurentK base = atom(&bare_u);
    if (eat('^')) {
      long e = integer();
      if (bare_u && e < 0) err("u-variable exponents must be non-negative");
      return power(base, e);
    }
    return base;
  }

  LaurentK power(const LaurentK& base, long e) {
    if (e >= 0) {
      if (e > 4000) err("exponent too large");
      return laurent_pow(base, e, k);
    }
    // negative exponent: invert a single monomial
    if (base.c.size() != 1) err("negative exponent of a non-monomial");
    auto& [deg, coeff] = *base.c.begin();
    if (deg != 0 && -e > 4000) err("exponent too large");
    KElem cinv = KElem::one(k) / coeff;
    LaurentK inv = LaurentK::monomial(-deg, cinv);
    return laurent_pow(inv, -e, k);
  }

  LaurentK atom(bool* bare_u = nullptr) {
    skip();
    if (pos >= s.size()) err("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      LaurentK v = expr();
      if (!eat(')')) err("expected ')'");
      return v;
    }
    if (std::isdigit((unsigned char)c)) {
      long v = integer();
      return LaurentK::monomial(0, KElem::from_int(k, v));
    }
    if (c == 'u') {
      ++pos;
      if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected index after 'u'");
      int idx = s[pos++] - '0';
      if (idx < 1 || idx > k->r) err("u" + std::to_string(idx) + " out of range (r = " + std::to_string(k->r) + ")");
      if (bare_u) *bare_u = true;
      return LaurentK::monomial(0, KElem::var(k, idx - 1));
    }
    if (c == 't') {
      ++pos;
      return LaurentK::monomial(1, KElem::one(k));
    }
    if (c == 'g') {
      ++pos;
      if (k->h == 1) err("'g' needs an extension field (h > 1)");
      return LaurentK::monomial(0, KElem::gen(k));
    }
    err("unexpected character");
  }
};

void print_fqpoly(std::ostringstream& os, const FqPoly& f, const FieldCtx* k) {
  if (f.is_zero()) {
    os << "0";
    return;
  }
  bool first = true;
  for (auto& tm : f.t) {
    if (!first) os << "+";
    first = false;
    bool printed = false;
    if (!tm.c.is_one() || tm.m.is_one()) {
      os << k->to_string(tm.c.v);
      printed = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (!tm.m.e[i]) continue;
      if (printed) os << "*";
      os << "u" << (i + 1);
      if (tm.m.e[i] > 1) os << "^" << tm.m.e[i];
      printed = true;
    }
  }
}

}  // namespace

LaurentK parse_laurent(const std::string& text, const FieldCtx* k) {
  Parser p{text, 0, k};
  LaurentK v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.err("trailing input");
  return v;
}

KElem parse_kelem(const std::string& text, const FieldCtx* k) {
  LaurentK v = parse_laurent(text, k);
  for (auto& [d, x] : v.c)
    if (d != 0) fail(errc::parse_error, "t is not allowed here: \"" + text + "\"");
  return v.is_zero() ? KElem::zero(k) : v.c.begin()->second;
}

std::string to_string(const KElem& a) {
  const FieldCtx* k = a.ctx();
  std::ostringstream os;
  if (a.is_zero()) return "0";
  bool frac = !a.is_poly();
  bool parens = frac && a.num.nterms() > 1;
  if (parens) os << "(";
  print_fqpoly(os, a.num, k);
  if (parens) os << ")";
  if (frac) {
    os << "/";
    int factors = 0;
    if (a.den.nterms() == 1) {
      auto& tm = a.den.t[0];
      if (!tm.c.is_one() || tm.m.is_one()) ++factors;
      for (int i = 0; i < kMaxVars; ++i)
        if (tm.m.e[i]) ++factors;
    }
    bool dparens = a.den.nterms() > 1 || factors > 1;
    if (dparens) os << "(";
    print_fqpoly(os, a.den, k);
    if (dparens) os << ")";
  }
  return os.str();
}

std::string to_string(const LaurentK& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, x] : f.c) {
    if (!first) os << " + ";
    first = false;
    std::string cs = to_string(x);
    if (d == 0) {
      os << cs;
      continue;
    }
    bool needs_parens = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
    if (cs == "1") {
      // bare power of t
    } else if (needs_parens && cs[0] != '(') {
      os << "(" << cs << ")*";
    } else {
      os << cs << "*";
    }
    os << "t";
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

}  // namespace swan
