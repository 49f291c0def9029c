#pragma once

#include <climits>
#include <memory>
#include <vector>

#include "polynomial.hpp"

namespace seqcm {

// Graded free module S(-a_1) + ... + S(-a_r); twists[i] = a_i, so the i-th
// generator sits in degree a_i.
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;

  FreeModule() = default;
  FreeModule(RingPtr r, std::vector<int> tw) : ring(std::move(r)), twists(std::move(tw)) {}
  static FreeModule rank_one(RingPtr r, int twist = 0) { return FreeModule(std::move(r), {twist}); }

  int rank() const { return static_cast<int>(twists.size()); }
  bool operator==(const FreeModule& o) const { return ring == o.ring && twists == o.twists; }
};

struct FreeElement {
  FreeModule mod;
  std::vector<Polynomial> coords;

  FreeElement() = default;
  FreeElement(FreeModule m, std::vector<Polynomial> c) : mod(std::move(m)), coords(std::move(c)) {}

  static FreeElement zero(const FreeModule& m) {
    std::vector<Polynomial> c(m.rank(), Polynomial::zero(m.ring));
    return FreeElement(m, std::move(c));
  }
  static FreeElement basis(const FreeModule& m, int i) {
    FreeElement e = zero(m);
    e.coords[i] = Polynomial::constant(m.ring, Rational(1));
    return e;
  }
  // f in position i.
  static FreeElement single(const FreeModule& m, int i, Polynomial f) {
    FreeElement e = zero(m);
    e.coords[i] = std::move(f);
    return e;
  }

  bool is_zero() const {
    for (const auto& p : coords)
      if (!p.is_zero()) return false;
    return true;
  }

  // Degree of a homogeneous element: deg(coord_i) + twist_i, constant over
  // the nonzero coordinates. Returns the max for inhomogeneous input.
  int degree() const {
    int d = INT_MIN;
    for (int i = 0; i < mod.rank(); ++i)
      if (!coords[i].is_zero()) d = std::max(d, coords[i].degree() + mod.twists[i]);
    return d;
  }

  bool is_homogeneous() const {
    int d = INT_MIN;
    for (int i = 0; i < mod.rank(); ++i) {
      const auto& p = coords[i];
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return false;
      int di = p.degree() + mod.twists[i];
      if (d != INT_MIN && di != d) return false;
      d = di;
    }
    return true;
  }
};

inline FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  FreeElement r = a;
  for (int i = 0; i < r.mod.rank(); ++i) r.coords[i] = r.coords[i] + b.coords[i];
  return r;
}

inline FreeElement operator-(const FreeElement& a, const FreeElement& b) {
  FreeElement r = a;
  for (int i = 0; i < r.mod.rank(); ++i) r.coords[i] = r.coords[i] - b.coords[i];
  return r;
}

inline FreeElement scale(const FreeElement& a, const Polynomial& f) {
  FreeElement r = a;
  for (auto& c : r.coords) c = c * f;
  return r;
}

// ---------------------------------------------------------------------------
// Module monomial orders.

// A module term is (component, monomial); coefficients ride separately.
struct SchreyerData;

class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, PositionOverTerm, Block, Schreyer };

  static ModuleOrder top(BaseOrder base = BaseOrder::Grevlex) {
    return ModuleOrder(Kind::TermOverPosition, base, 0, nullptr);
  }
  static ModuleOrder pot(BaseOrder base = BaseOrder::Grevlex) {
    return ModuleOrder(Kind::PositionOverTerm, base, 0, nullptr);
  }
  // Components < split beat every component >= split (elimination order).
  static ModuleOrder block(int split, BaseOrder base = BaseOrder::Grevlex) {
    return ModuleOrder(Kind::Block, base, split, nullptr);
  }
  static ModuleOrder schreyer(std::shared_ptr<const SchreyerData> data) {
    return ModuleOrder(Kind::Schreyer, BaseOrder::Grevlex, 0, std::move(data));
  }

  Kind kind() const { return kind_; }

  // +1 if (ca,ma) > (cb,mb), 0 if equal, -1 otherwise.
  int cmp(int ca, const Monomial& ma, int cb, const Monomial& mb) const;

 private:
  ModuleOrder(Kind k, BaseOrder b, int split, std::shared_ptr<const SchreyerData> s)
      : kind_(k), base_(b), split_(split), schreyer_(std::move(s)) {}

  Kind kind_;
  BaseOrder base_;
  int split_;
  std::shared_ptr<const SchreyerData> schreyer_;
};

// Order induced on a free module over a list of leading terms in the parent
// module: compare images m * lead[comp] in the parent order, ties to the
// smaller component.
struct SchreyerData {
  ModuleOrder parent = ModuleOrder::top();
  std::vector<std::pair<int, Monomial>> leads;  // (component, monomial) per generator
};

inline int ModuleOrder::cmp(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
  switch (kind_) {
    case Kind::TermOverPosition: {
      int c = cmp_mono(ma, mb, base_);
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    case Kind::PositionOverTerm: {
      if (ca != cb) return ca < cb ? 1 : -1;
      return cmp_mono(ma, mb, base_);
    }
    case Kind::Block: {
      int ba = ca < split_ ? 0 : 1, bb = cb < split_ ? 0 : 1;
      if (ba != bb) return ba < bb ? 1 : -1;
      int c = cmp_mono(ma, mb, base_);
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    case Kind::Schreyer: {
      const auto& la = schreyer_->leads[ca];
      const auto& lb = schreyer_->leads[cb];
      int c = schreyer_->parent.cmp(la.first, ma * la.second, lb.first, mb * lb.second);
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

}  // namespace seqcm
