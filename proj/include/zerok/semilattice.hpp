#pragma once

// Semilattices with zero.  Elements are canonical serializations (strings);
// the empty string is reserved for the zero element and is never a member.
// Concrete semilattices are lazy: they answer product and membership queries
// but do not enumerate themselves.  Finite slices of interest ("universes")
// are passed around explicitly as sorted element lists.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zerok {

// Canonical serialization of a semilattice element; "" denotes zero.
using Elem = std::string;

inline bool is_zero(const Elem& e) { return e.empty(); }

class Semilattice {
 public:
  virtual ~Semilattice() = default;

  // Human-readable identifier, used in diagnostics.
  virtual std::string name() const = 0;

  // Commutative, associative, idempotent product of two nonzero elements;
  // returns "" when the product is zero.
  virtual Elem product(const Elem& a, const Elem& b) const = 0;

  // Whether a string is the canonical serialization of a nonzero element.
  virtual bool contains(const Elem& a) const = 0;

  // a <= b in the natural partial order (ab == a); zero is below everything.
  bool leq(const Elem& a, const Elem& b) const;

  // a <= b and a != b.
  bool strictly_below(const Elem& a, const Elem& b) const;
};

// A finite semilattice given by an explicit multiplication table.  Intended
// for tests and small hand-built examples.  Pairs absent from the table
// multiply to zero.
class TableSemilattice final : public Semilattice {
 public:
  TableSemilattice(std::string name, std::vector<Elem> elements,
                   std::map<std::pair<Elem, Elem>, Elem> table);

  std::string name() const override { return name_; }
  Elem product(const Elem& a, const Elem& b) const override;
  bool contains(const Elem& a) const override;

  const std::vector<Elem>& elements() const { return elements_; }

 private:
  std::string name_;
  std::vector<Elem> elements_;
  std::set<Elem> element_set_;
  std::map<std::pair<Elem, Elem>, Elem> table_;
};

}  // namespace zerok
