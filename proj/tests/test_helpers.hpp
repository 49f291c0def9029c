#pragma once

#include <random>

#include "seqcm/polynomial.hpp"

namespace seqcm::testing {

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_deg) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  Monomial m(nvars);
  int deg = dd(rng);
  std::uniform_int_distribution<int> dv(0, nvars - 1);
  for (int i = 0; i < deg; ++i) m.e[dv(rng)] += 1;
  return m;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int max_terms,
                                    int max_deg) {
  std::uniform_int_distribution<int> dt(0, max_terms);
  std::uniform_int_distribution<long> dc(-9, 9);
  std::vector<Term> terms;
  int k = dt(rng);
  for (int i = 0; i < k; ++i) {
    long num = dc(rng);
    long den = 1 + std::abs(dc(rng)) % 4;
    if (num == 0) continue;
    terms.push_back(Term{random_monomial(rng, ring->nvars(), max_deg), rat(num, den)});
  }
  return Polynomial(ring, std::move(terms));
}

inline Polynomial random_linear_form(std::mt19937_64& rng, const RingPtr& ring, int bound = 3) {
  std::uniform_int_distribution<int> dc(-bound, bound);
  while (true) {
    std::vector<Term> terms;
    for (int i = 0; i < ring->nvars(); ++i) {
      int c = dc(rng);
      if (c != 0) terms.push_back(Term{Monomial::var(ring->nvars(), i), Rational(c)});
    }
    if (!terms.empty()) return Polynomial(ring, std::move(terms));
  }
}

}  // namespace seqcm::testing
