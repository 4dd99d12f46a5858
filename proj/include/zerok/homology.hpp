#pragma once

// Smith normal form, chain complexes of free abelian groups, their homology,
// Koszul-type complexes built from commuting endomorphisms, and the
// extraction of boundary matrices from resolution generator expansions.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zerok/integers.hpp"
#include "zerok/matrix.hpp"

namespace zerok {

// U * A * V = D with U, V unimodular and D diagonal with nonnegative
// entries d_1 | d_2 | ... | d_r (then zeros).  vinv is the inverse of V,
// tracked during the reduction so that coordinates in the column basis of V
// can be read off without solving.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix vinv;

  std::size_t rank() const;
  // Nonzero diagonal entries, in divisibility order.
  std::vector<Int> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

// A finitely generated abelian group in invariant-factor form:
//   Z^rank (+) Z/t_1 (+) ... (+) Z/t_k  with 1 < t_1 | t_2 | ... | t_k.
struct AbGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbGroup&) const = default;
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }

  // "0", "Z", "Z^2 (+) Z/3", ...
  std::string to_text() const;
};

// Brings an arbitrary list of cyclic orders (0 meaning a free factor) into
// invariant-factor form.
AbGroup make_ab_group(std::size_t rank, std::vector<Int> orders);

// A bounded chain complex of free abelian groups
//   C_n -> ... -> C_1 -> C_0,
// boundaries[k] is the matrix of d_{k+1}: C_{k+1} -> C_k, of shape
// ranks[k] x ranks[k+1].  Labels, when present, name the basis of each C_k.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  std::vector<std::vector<std::string>> labels;

  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }

  // Shape checks and d d = 0; throws input_error on violation.
  void validate() const;
};

// H_k of the complex: ker d_k / im d_{k+1}.  The kernel of d_k is computed
// as the trailing columns of the V matrix of its Smith form, the incoming
// boundary is rewritten in that kernel basis (exactly, via vinv), and the
// Smith form of the rewritten matrix yields rank and invariant factors.
AbGroup homology(const ChainComplex& c, std::size_t k);

// All homology groups H_0 .. H_n.
std::vector<AbGroup> homology_all(const ChainComplex& c);

// The Koszul-type complex of n commuting m x m integer matrices M_1..M_n:
// C_k = (Z^m)^(n choose k) indexed by k-element subsets S in lexicographic
// order, with
//   d(e_S (x) v) = sum_{i in S} (-1)^{pos(i,S)+1} e_{S-i} (x) (I - M_i) v,
// pos counting from 1 in increasing order.  Requires pairwise commuting
// inputs (input_error otherwise).
ChainComplex koszul_complex(const std::vector<IntMatrix>& mats);

// A generator expansion: integer coefficients on serialized keys of the
// previous level.
using Expansion = std::map<std::string, Int>;

struct LabelledExpansion {
  std::string label;
  Expansion expansion;
};

// Builds the boundary matrix taking each generator to its expansion written
// in the given basis.  Keys are first translated by key_to_rep (orbit
// projection; return "" to drop a key whose generator was omitted as zero),
// then the translated expansions are solved exactly against the basis
// expansions.  A generator whose expansion does not lie in the span of the
// basis, or meets a basis that does not determine coordinates uniquely, is
// a structure_error naming the generator.
IntMatrix boundary_from_expansions(
    const std::vector<LabelledExpansion>& basis,
    const std::vector<LabelledExpansion>& generators,
    const std::function<std::string(const std::string&)>& key_to_rep);

}  // namespace zerok
