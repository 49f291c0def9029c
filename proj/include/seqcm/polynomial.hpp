#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "ring.hpp"

namespace seqcm {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept strictly descending in grevlex; no zero coefficients are
// stored, so equality is structural. Values are immutable in spirit: every
// operation returns a fresh polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int i, int power = 1);
  static Polynomial monomial(RingPtr ring, Monomial m, Rational c = Rational(1));

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }

  // Total degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const;
  bool is_term() const { return terms_.size() <= 1; }

  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return eq(o); }
  bool operator!=(const Polynomial& o) const { return !eq(o); }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(int k) const;

  // x_i -> x_i^{powers[i]}; powers must all be >= 1.
  Polynomial substitute_powers(const std::vector<int>& powers) const;

  // Canonical text form: terms descending grevlex, coefficients in lowest
  // terms, e.g. "x^2*y - 3/2*z + 1".
  std::string to_string() const;

 private:
  bool eq(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// Parses the canonical syntax (identifiers, `*`, `^`, `+`, `-`, integer or
// p/q coefficients). Throws std::invalid_argument with a column-annotated
// message on bad input.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace seqcm
