#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqcm {

// Subsets of the variable set, e.g. the support of a monomial or the
// generators of a monomial prime, are bitmasks (variable i -> bit i).
using VarMask = std::uint32_t;

inline int mask_size(VarMask m) { return __builtin_popcount(m); }

// The ambient polynomial ring Q[x_1,...,x_n] with its standard grading.
// Immutable; shared by every value built over it.
struct Ring {
  std::vector<std::string> vars;

  explicit Ring(std::vector<std::string> names) : vars(std::move(names)) {
    if (vars.empty()) throw std::invalid_argument("ring needs at least one variable");
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate variable name");
    if (vars.size() > 31) throw std::invalid_argument("too many variables");
  }

  int nvars() const { return static_cast<int>(vars.size()); }

  int var_index(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }

  VarMask all_vars_mask() const { return (VarMask(1) << nvars()) - 1; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

// A monomial is its exponent vector; the ring is carried by whatever owns it.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int n) : e(n, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  static Monomial one(int n) { return Monomial(n); }
  static Monomial var(int n, int i, int power = 1) {
    Monomial m(n);
    m.e[i] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  VarMask support() const {
    VarMask m = 0;
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > 0) m |= VarMask(1) << i;
    return m;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] += b.e[i];
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

// b / a, requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] -= a.e[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

inline Monomial pow(const Monomial& a, int k) {
  Monomial r = a;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] *= k;
  return r;
}

inline Monomial radical(const Monomial& a) {
  Monomial r = a;
  for (int& x : r.e) x = x > 0 ? 1 : 0;
  return r;
}

enum class BaseOrder { Grevlex, Lex };

// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int cmp_mono(const Monomial& a, const Monomial& b, BaseOrder ord) {
  const int n = a.nvars();
  if (ord == BaseOrder::Lex) {
    for (int i = 0; i < n; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }
  // grevlex: total degree first, ties by the reverse-last-variable rule
  // (smaller exponent in the last differing variable wins).
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (int i = n - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
  return cmp_mono(a, b, BaseOrder::Grevlex);
}

}  // namespace seqcm
