#pragma once

#include <map>
#include <string>
#include <vector>

#include "swan/covector.hpp"
#include "swan/radius.hpp"
#include "swan/rng.hpp"

namespace swan {

struct FuzzBounds {
  std::vector<int> primes{2, 3, 5};
  int max_r = 2;
  int max_m = 2;
  int max_n = 9;
  int max_comonomials = 3;
};

struct FuzzReport {
  uint64_t seed = 0;
  long count = 0;
  long mismatches = 0;
  std::vector<std::string> mismatch_docs;   // offending characters, printed
  std::map<long, long> conductor_histogram;  // sw -> #cases
};

/* random elements, shared by the test suites */
Fq random_fq(Rng& rng, const FieldCtx* k, bool nonzero = false);
FqPoly random_fqpoly(Rng& rng, const FieldCtx* k, int max_terms, int max_deg, bool nonzero = false);
KElem random_kelem(Rng& rng, const FieldCtx* k, int max_terms = 3, int max_deg = 3,
                   bool allow_fraction = true, bool nonzero = false);
WittK random_witt(Rng& rng, const FieldCtx* k, int len, int max_terms = 2, int max_deg = 2);
// random vector of length m+1 outside pW (retries until pure)
WittK random_witt_not_pW(Rng& rng, const FieldCtx* k, int m);
// random character with 1..max co-monomials and an optional residual part
Character random_character(Rng& rng, const FieldCtx* k, const FuzzBounds& b);
// random covector (possibly impure) over a field drawn from the bounds
CoVector random_covector(Rng& rng, const FieldCtx* k, const FuzzBounds& b);

FuzzReport fuzz_compare(uint64_t seed, long count, const FuzzBounds& bounds);

}  // namespace swan
