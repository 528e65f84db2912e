#pragma once

#include <string>

#include "swan/kelem.hpp"

namespace swan {

/* Expression grammar: integers, u1..u9, t, + - * / ^ ( ); exponents are
 * signed integers for t and non-negative for u_i.  `g` denotes the F_q
 * generator when h > 1. */
LaurentK parse_laurent(const std::string& text, const FieldCtx* k);
KElem parse_kelem(const std::string& text, const FieldCtx* k);  // t rejected

std::string to_string(const KElem& a);
std::string to_string(const LaurentK& f);

}  // namespace swan
