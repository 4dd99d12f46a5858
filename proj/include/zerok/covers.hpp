#pragma once

// Cover systems: an assignment e -> S(e) of finite sets of covers to nonzero
// elements, the four conditions such a system must satisfy for the induced
// resolution to work, and the construction of resolution generators up to
// level 2.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zerok/action.hpp"
#include "zerok/homology.hpp"
#include "zerok/semilattice.hpp"
#include "zerok/zcomb.hpp"

namespace zerok {

// e -> list of covers of e (each a set of nonzero elements below e).  The
// order of the list is meaningful: level-2 generators pair the i-th cover of
// an element with the i-th cover of its neighbours.
struct CoverSystem {
  const Semilattice* lat = nullptr;
  std::function<std::vector<std::vector<Elem>>(const Elem&)> covers;
};

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct CheckRecord {
  std::string condition;          // "i" | "ii" | "iii" | "iv"
  std::vector<Elem> witness;      // elements involved
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  bool all_passed() const;
  bool any_failed() const;
};

// One line per record: "condition <c>: <verdict> [witness ...] detail".
std::string report_to_text(const CheckReport& r);

// Condition (i): for nonzero d, e in the universe with de != 0 and every
// cover R in S(e), the translated set (d R)^x either contains de or is
// itself a member of S(de).
CheckReport check_condition_i(const CoverSystem& sys,
                              const std::vector<Elem>& universe);

// Condition (ii): for pairwise distinct covers R_1..R_r in S(e) and elements
// eps_i drawn from the support of join(R_i), whenever the product over
// i != j is nonzero the full product lies strictly below it (for r = 1 the
// empty product is e itself).
CheckReport check_condition_ii(const CoverSystem& sys,
                               const std::vector<Elem>& universe);

// Condition (iii): equivariance of the system.  For every group element g of
// word length <= depth and every e in the universe inside the domain of
// theta_g, the translated family theta_g(S(e)) equals S(theta_g(e)) as a set
// of sets.  This examines a finite slice only; the summary record says so.
CheckReport check_condition_iii(const CoverSystem& sys,
                                const PartialAction& act,
                                const std::vector<Elem>& universe,
                                std::size_t depth);

// Condition (iv): every S(e) consists of genuine covers of e (relative to
// the universe) and the number of covers per element is uniformly bounded;
// the bound found is reported.
CheckReport check_condition_iv(const CoverSystem& sys,
                               const std::vector<Elem>& universe);

// All four checks concatenated.
CheckReport check_all(const CoverSystem& sys, const PartialAction& act,
                      const std::vector<Elem>& universe, std::size_t depth);

// One resolution generator.  Level 0: an orbit representative, expansion =
// itself.  Level 1: a representative e with a nonempty subset T of S(e),
// expansion = prod_{i in T} (e - join(S(e)[i])) as a combination over E.
// Level 2: a representative e with an ordered pair (i, j) of distinct cover
// indices, expansion = formal combination over level-1 keys
//   p(e|i) - p(e|{i,j}) - sum_{f in S(e)[j]} p(f|i),
// which is exactly zero when pushed down to E.
struct ResolutionGenerator {
  std::string label;           // "<rep>#<tags>"
  Elem base;                   // the representative element
  std::vector<std::size_t> cover_indices;  // T, or {i, j} for level 2
  Expansion expansion;         // keys: E elements (levels 0-1), labels (level 2)
};

struct ResolutionLevels {
  std::vector<std::vector<ResolutionGenerator>> levels;  // levels[k]
  Orbits orbit_decomposition;

  // Translates a concrete key ("<elem>" or "<elem>#<tags>") to the label of
  // the basis generator in the same orbit; "" when that generator was
  // omitted because its expansion vanished.
  std::string key_to_rep(const std::string& key) const;

  // Boundary matrix d_k: level k -> level k-1 (1 <= k <= levels-1).
  IntMatrix boundary(std::size_t k) const;

  // The induced chain complex with labelled bases.
  ChainComplex complex() const;

 private:
  friend ResolutionLevels build_resolution(const CoverSystem& sys,
                                           const PartialAction& act,
                                           const std::vector<Elem>& universe,
                                           std::size_t max_level);
  std::map<std::string, std::string> rep_of_key_;
};

// Builds resolution generators for levels 0..max_level over the given
// universe.  max_level > 2 is refused: no exact recipe beyond level 2 is
// implemented.  Every stored level-0/1 expansion is verified to be a
// projection (p * p = p) in the combination ring; level-2 expansions are
// verified against their defining identity by pushing down to E.
ResolutionLevels build_resolution(const CoverSystem& sys,
                                  const PartialAction& act,
                                  const std::vector<Elem>& universe,
                                  std::size_t max_level);

}  // namespace zerok
