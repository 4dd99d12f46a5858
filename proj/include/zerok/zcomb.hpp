#pragma once

// Integer combinations of nonzero semilattice elements, i.e. elements of the
// free abelian group on E \ {0}.  The semilattice product extends bilinearly
// and makes this a commutative ring (without unit, in general).

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zerok/integers.hpp"
#include "zerok/semilattice.hpp"

namespace zerok {

class ZComb {
 public:
  explicit ZComb(const Semilattice* lat);

  // c * e as a combination; e must be a nonzero element of lat.
  static ZComb basis(const Semilattice* lat, const Elem& e, const Int& c = 1);

  const Semilattice* lattice() const { return lat_; }
  const std::map<Elem, Int>& terms() const { return coef_; }

  bool is_zero() const { return coef_.empty(); }
  Int coefficient(const Elem& e) const;

  // Adds c * e in place; e must be nonzero and belong to the carrier.
  void add_term(const Elem& e, const Int& c);

  ZComb& operator+=(const ZComb& other);
  ZComb& operator-=(const ZComb& other);
  ZComb& operator*=(const Int& c);

  friend ZComb operator+(ZComb a, const ZComb& b) { return a += b; }
  friend ZComb operator-(ZComb a, const ZComb& b) { return a -= b; }
  friend ZComb operator*(const Int& c, ZComb a) { return a *= c; }

  bool operator==(const ZComb& other) const;

  std::string to_string() const;

 private:
  const Semilattice* lat_;
  std::map<Elem, Int> coef_;  // nonzero coefficients on nonzero elements
};

// Bilinear extension of the semilattice product.  Both arguments must share
// the same carrier semilattice (pointer identity).
ZComb product(const ZComb& x, const ZComb& y);

// The join of a finite set of nonzero elements:
//   join(R) = sum over nonempty S subseteq R of (-1)^{|S|+1} prod(S),
// computed by depth-first subset enumeration with zero-product pruning.
// Elements of R must be distinct.  join({}) = 0.
ZComb join(const Semilattice* lat, const std::vector<Elem>& R);

// Elements carrying a nonzero coefficient, in canonical (lexicographic)
// order.
std::vector<Elem> support(const ZComb& x);

// Whether R is a cover of e relative to the given universe: every member of
// R lies below e, R is nonempty, and every nonzero f <= e drawn from the
// universe meets some r in R (f * r != 0).
bool is_finite_cover(const Semilattice* lat, const std::vector<Elem>& R,
                     const Elem& e, const std::vector<Elem>& universe);

}  // namespace zerok
