#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace second {

// Second evaluator for the N(M) recursion, on GMP integers and written from
// the formulas rather than from the library code.
inline mpz_class gmp_ramsey(unsigned long p, const mpz_class& q) {
  static const std::map<std::pair<unsigned long, unsigned long>, unsigned long> exact{
      {{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23},
      {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
  if (p == 1 || q == 1) return 1;
  if (p == 2) return q;
  if (q == 2) return p;
  if (q.fits_ulong_p()) {
    const unsigned long qs = q.get_ui();
    const std::pair key{std::min(p, qs), std::max(p, qs)};
    if (auto it = exact.find(key); it != exact.end()) return it->second;
  }
  // binom(p + q - 2, p - 1), symmetric in p and q
  mpz_class top = q + (p - 2);
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), p - 1);
  return r;
}

inline std::vector<mpz_class> gmp_n_trace(unsigned long m) {
  const mpz_class r = gmp_ramsey(m, mpz_class(m));
  std::vector<mpz_class> ks{r};
  while (ks.size() < m) {
    // size of the (k_{t-1}, ..., k_1)-tree
    mpz_class size = 1, layer = 1;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
      layer *= *it;
      size += layer;
    }
    ks.push_back(gmp_ramsey(m, size * r));
  }
  return ks;
}

}  // namespace second
