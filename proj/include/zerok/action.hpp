#pragma once

// Partial actions of a group on a semilattice, the enveloping semilattice
// they dilate to, and the ops that depend on them: products and dilations of
// enveloping elements, orbit decompositions, and a bounded search for fixed
// points (freeness check).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerok/group.hpp"
#include "zerok/semilattice.hpp"

namespace zerok {

// A partial action is given per generator letter: step(l, e) applies the
// partial automorphism of one letter to a nonzero element, returning "" when
// e is outside the letter's domain.  Words act letter by letter, rightmost
// letter first; by the partial-action axioms this computes a restriction of
// the action of the whole group element, and it is exact along canonical
// words for the groups built here.
struct PartialAction {
  const Group* group = nullptr;
  const Semilattice* lat = nullptr;
  std::function<Elem(const Letter&, const Elem&)> step;

  // Principal generator of the letter's domain ideal: step(l, e) is defined
  // exactly for e below domain(l).  "" means the letter acts everywhere.
  std::function<Elem(const Letter&)> domain;

  // Applies a word right-to-left; "" if any stage is undefined.
  Elem apply_word(const Word& w, Elem e) const;

  // Applies a serialized group element along its canonical word.
  Elem apply(const std::string& g, const Elem& e) const;

  // theta_g(e * d(g)): the image of the largest part of e the word can act
  // on, obtained by restricting to each letter's domain along the way; ""
  // when the restriction dies out.
  Elem apply_restricted(const Word& w, Elem e) const;
};

// An element [g, e] of the enveloping semilattice: the element e translated
// into the g-th copy of E.  [g, d] and [h, e] coincide iff the action of
// h^{-1} g carries d to e.
struct EnvElem {
  std::string g;
  Elem e;

  bool operator==(const EnvElem&) const = default;
  auto operator<=>(const EnvElem&) const = default;
};

// Canonical representative of the class of [g, e]: among all reachable
// presentations [g k^{-1}, theta_k(e)] choose the one minimizing (word
// length of the group part, its serialization, the element).  Reachability
// is explored letter by letter with word length bounded by |g|, which is
// exhaustive for geodesic letter actions (free groups).
EnvElem env_canonical(const PartialAction& act, const EnvElem& x);

// Product in the enveloping semilattice:
//   [g, d] * [h, e] = [g, d * theta_{g^{-1} h}(e * d(g^{-1} h))],
// zero (nullopt) when the translated parts do not meet.  Both factors are
// canonicalized first; the result is canonical.
std::optional<EnvElem> env_product(const PartialAction& act, const EnvElem& x,
                                   const EnvElem& y);

// The global action on the enveloping semilattice: tau_g [h, e] = [g h, e].
EnvElem dilate(const PartialAction& act, const std::string& g,
               const EnvElem& x);

struct Orbits {
  // Equivalence classes, each sorted; classes ordered by their least member.
  std::vector<std::vector<Elem>> classes;
  // Least member of the class containing e; input_error for unknown e.
  Elem representative(const Elem& e) const;

  std::map<Elem, std::size_t> index;  // element -> class position
};

// Orbit decomposition of the universe under single-letter moves.  The
// universe must be closed: a letter carrying a member outside the universe
// is a structure_error identifying the element and the letter.
Orbits orbits(const PartialAction& act, const std::vector<Elem>& universe);

struct FixedPointWitness {
  std::string g;
  Elem e;
};

struct FreeActionReport {
  std::size_t depth = 0;
  std::size_t elements_checked = 0;
  std::size_t group_elements_checked = 0;
  std::vector<FixedPointWitness> violations;
  bool free_up_to_depth() const { return violations.empty(); }
};

// Searches for nontrivial fixed points theta_g(e) = e over all group
// elements of word length 1..depth and all e in the universe.  Finding none
// certifies freeness only up to the stated depth; the report says exactly
// what was checked.
FreeActionReport free_action_check(const PartialAction& act,
                                   const std::vector<Elem>& universe,
                                   std::size_t depth);

}  // namespace zerok
