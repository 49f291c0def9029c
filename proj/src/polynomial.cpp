#include "seqcm/polynomial.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace seqcm {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  // Normalize: sort descending grevlex, merge equal monomials, drop zeros.
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return cmp_grevlex(a.mono, b.mono) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return sgn(t.coeff) == 0; }),
               terms_.end());
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  if (sgn(c) == 0) return Polynomial(std::move(ring));
  int n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial::one(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, int i, int power) {
  int n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial::var(n, i, power), Rational(1)}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational c) {
  if (sgn(c) == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{std::move(m), std::move(c)}});
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

bool Polynomial::eq(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

// Merge of two strictly-descending term lists.
static std::vector<Term> merge_add(const std::vector<Term>& a,
                                   const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = cmp_grevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational s = negate_b ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().coeff = -out.back().coeff;
  }
  return out;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring())
    throw std::invalid_argument("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r(ring_ ? ring_ : o.ring_);
  r.terms_ = merge_add(terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r(ring_ ? ring_ : o.ring_);
  r.terms_ = merge_add(terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return r;  // multiplication by a monomial preserves the grevlex sort
}

Polynomial Polynomial::scaled(const Rational& c) const {
  return times_monomial(Monomial::one(ring_->nvars()), c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial acc(ring_ ? ring_ : o.ring_);
  for (const auto& t : o.terms_) {
    Polynomial part = times_monomial(t.mono, t.coeff);
    acc = acc + part;
  }
  return acc;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = Polynomial::constant(ring_, Rational(1));
  Polynomial base = *this;
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

Polynomial Polynomial::substitute_powers(const std::vector<int>& powers) const {
  if (static_cast<int>(powers.size()) != ring_->nvars())
    throw std::invalid_argument("substitute_powers: wrong assignment length");
  for (int p : powers)
    if (p < 1) throw std::invalid_argument("substitute_powers: powers must be >= 1");
  std::vector<Term> out = terms_;
  for (auto& t : out)
    for (int i = 0; i < t.mono.nvars(); ++i) t.mono.e[i] *= powers[i];
  return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool unit_coeff = is_one(c);
    bool has_vars = !t.mono.is_one();
    if (!unit_coeff || !has_vars) os << rat_to_string(c);
    if (has_vars) {
      bool first_var = !unit_coeff ? false : true;
      for (int i = 0; i < t.mono.nvars(); ++i) {
        if (t.mono.e[i] == 0) continue;
        if (!first_var || !unit_coeff) os << "*";
        first_var = false;
        os << ring_->vars[i];
        if (t.mono.e[i] > 1) os << "^" << t.mono.e[i];
      }
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("col " + std::to_string(pos + 1) + ": " + msg);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return std::string(s.substr(start, pos - start));
  }
  std::string digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  PolyLexer lx{text};
  const int n = ring->nvars();
  std::vector<Term> terms;

  bool expect_term = true;
  int sign = 1;
  while (!lx.eof()) {
    char c = lx.peek();
    if (c == '+' || c == '-') {
      if (expect_term && !terms.empty() && sign != 0) {
        // consecutive signs like "+ -x" are fine; just fold them in
      }
      if (c == '-') sign = -sign;
      ++lx.pos;
      expect_term = true;
      continue;
    }
    if (!expect_term) lx.fail("expected '+' or '-' between terms");

    // one term: [coeff] [* var[^k]]*
    Rational coeff(sign);
    Monomial mono = Monomial::one(n);
    bool saw_factor = false;
    bool expect_factor = true;
    while (true) {
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        if (!expect_factor) break;
        std::string num = lx.digits();
        std::string den;
        if (lx.peek() == '/') {
          ++lx.pos;
          den = lx.digits();
        }
        Rational q = rat_from_string(den.empty() ? num : num + "/" + den);
        coeff *= q;
        saw_factor = true;
        expect_factor = false;
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        if (!expect_factor) break;
        size_t at = lx.pos;
        std::string name = lx.ident();
        int vi = ring->var_index(name);
        if (vi < 0) {
          lx.pos = at;
          lx.fail("unknown variable '" + name + "'");
        }
        int exp = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          exp = std::stoi(lx.digits());
          if (exp < 0) lx.fail("negative exponent");
        }
        mono.e[vi] += exp;
        saw_factor = true;
        expect_factor = false;
      } else if (p == '*') {
        if (expect_factor) lx.fail("unexpected '*'");
        ++lx.pos;
        expect_factor = true;
      } else {
        break;
      }
    }
    if (!saw_factor) lx.fail("expected a term");
    if (expect_factor) lx.fail("dangling '*'");
    terms.push_back(Term{std::move(mono), std::move(coeff)});
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !terms.empty()) lx.fail("dangling sign");
  if (terms.empty()) lx.fail("empty polynomial");
  return Polynomial(ring, std::move(terms));
}

}  // namespace seqcm
