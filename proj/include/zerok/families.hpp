#pragma once

// The four worked families: finite-graph path spaces, one-dimensional
// tilings from a factorial language, right-angled Artin monoid boundaries,
// and multiplicative-translational arithmetic progressions.  Each family
// supplies its semilattice, acting group, partial action, cover system and a
// finite universe, plus the induced chain complex and K-groups.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zerok/action.hpp"
#include "zerok/covers.hpp"
#include "zerok/group.hpp"
#include "zerok/homology.hpp"
#include "zerok/integers.hpp"
#include "zerok/ktheory.hpp"
#include "zerok/semilattice.hpp"

namespace zerok {

// Everything needed to run checks and build resolutions for one family
// instance.  The action and cover callbacks capture the semilattice and
// group, so those are kept alive by shared ownership.
struct FamilySystem {
  std::shared_ptr<const Semilattice> lat;
  std::shared_ptr<const Group> group;
  PartialAction action;
  CoverSystem covers;
  std::vector<Elem> universe;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// Graphs.  Elements are finite paths (edge lists read from the range
// vertex); a path extends another by appending edges at its source.  The
// free group on the edges acts by prepending/removing range edges, each
// regular vertex is covered by its one-step extensions, and the boundary of
// the induced two-term complex is I - A0^t over -A1^t for the vertex
// adjacency matrix split into regular and singular columns.

struct GraphEdge {
  std::string src;  // source vertex of the edge
  std::string dst;  // range vertex of the edge
};

struct GraphDesc {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;
};

// System truncated to paths of length <= max_len (the action returns zero
// beyond the ball so the universe is closed).
FamilySystem graph_system(const GraphDesc& desc, std::size_t max_len);

// Two-term complex over orbit representatives (vertices): rows ordered
// regular vertices first, then singular, each part lexicographically;
// columns are the regular vertices.  Built through the resolution machinery.
ChainComplex graph_complex(const GraphDesc& desc);

// The closed-form boundary [I - A0^t ; -A1^t]; used to cross-check the
// resolution-built complex.
IntMatrix graph_boundary_closed_form(const GraphDesc& desc);

KResult graph_ktheory(const GraphDesc& desc);

// Runs the four cover-system checks on the truncated system.
CheckReport graph_checks(const GraphDesc& desc, std::size_t max_len,
                         std::size_t depth);

// ---------------------------------------------------------------------------
// Tilings.  The language is either the factor set of a periodic bi-infinite
// word or an explicit word list (closed under factors).  Elements are
// admissible words with one marked letter; the product glues patterns along
// the mark.  The free group on admissible two-letter words moves the mark;
// covers extend a word by one letter on the left or on the right.

struct TilingDesc {
  std::vector<std::string> alphabet;  // single lowercase letters
  std::string period;                 // nonempty for periodic languages
  std::vector<std::string> words;     // alternative: explicit language
};

class TilingLang {
 public:
  // max_len: longest word the language is materialized for.
  TilingLang(const TilingDesc& desc, std::size_t max_len);

  bool admissible(const std::string& w) const;
  const std::vector<char>& alphabet() const { return alphabet_; }
  // All admissible words of the given length.
  std::vector<std::string> words_of_length(std::size_t n) const;
  std::size_t max_len() const { return max_len_; }

 private:
  std::vector<char> alphabet_;
  std::size_t max_len_;
  std::set<std::string> words_;
};

// System over marked words of pattern length <= max_len.  The mark-moving
// action preserves pattern length, so the universe is exactly closed.
FamilySystem tiling_system(std::shared_ptr<const TilingLang> lang,
                           std::size_t max_len);

// The depth-N complex: C_0 over words of length <= N+1; C_1 keeps the
// one-sided generators at words of length <= N and the two-sided ones at
// words of length <= N-1 (so every boundary term stays inside C_0); C_2 at
// words of length <= N-1.  Requires N >= 2.
ChainComplex tiling_complex(const TilingLang& lang, std::size_t N);

struct TilingDepthResult {
  std::size_t depth = 0;
  KResult k;
};

struct TilingKTheory {
  std::vector<TilingDepthResult> per_depth;
  // The last two requested depths produced identical K-groups.  Reported,
  // never assumed: equality of the computed answers at those depths only.
  bool stabilized = false;
  std::vector<std::string> notes;
};

TilingKTheory tiling_ktheory(const TilingDesc& desc,
                             const std::vector<std::size_t>& depths,
                             bool run_checks);

CheckReport tiling_checks(const TilingDesc& desc, std::size_t max_len,
                          std::size_t depth);

// ---------------------------------------------------------------------------
// Right-angled Artin monoid boundaries.  The semilattice consists of the
// principal right ideals pM of the trace monoid plus zero; the group is the
// corresponding right-angled Artin group acting by left multiplication.
// There is a single orbit and a single level-1 generator, whose boundary is
// the clique-count alternating sum chi of the commutation graph.

struct RaamDesc {
  std::vector<std::string> generators;
  // Pairs of generator indices that commute.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

FamilySystem raam_system(const RaamDesc& desc, std::size_t max_len);

// chi = sum over cliques K of the commutation graph (including the empty
// clique) of (-1)^|K|.
Int raam_euler_characteristic(const RaamDesc& desc);

// One-by-one complex [chi], built through the resolution machinery.
ChainComplex raam_complex(const RaamDesc& desc);

// K_0 = Z/|chi| (or Z when chi = 0), K_1 = ker[chi].  Adds a warning note
// when the monoid splits as a direct product (complement of the commutation
// graph disconnected), where the boundary model is degenerate.
KResult raam_ktheory(const RaamDesc& desc);

CheckReport raam_checks(const RaamDesc& desc, std::size_t max_len,
                        std::size_t depth);

// ---------------------------------------------------------------------------
// Arithmetic progressions under translation and multiplication by fixed
// primes.  Progressions are represented by residues (j mod m, m) with m a
// product of the primes; the i-th cover of (j, m) refines it into the p_i
// subprogressions modulo p_i m.  On orbit spaces each scaling acts as
// multiplication by p_i, so the complex is the Koszul complex of the 1x1
// matrices [p_i].

struct NqDesc {
  std::vector<Int> primes;  // distinct, each >= 2
};

// Residue-model system with moduli dividing the product of the primes.
FamilySystem nq_system(const NqDesc& desc);

// Exact-progression model (j an actual natural number); the residue model
// identifies translated progressions and therefore has non-free stabilizers,
// so freeness searches run here instead.
FamilySystem nq_progression_system(const NqDesc& desc, std::size_t j_bound,
                                   const Int& modulus_bound);

ChainComplex nq_complex(const NqDesc& desc);

// Assembles K-groups from the Koszul complex; three primes yield an
// extension problem for K_0, four or more are refused (refusal_error) with
// the homology attached to the message.
KResult nq_ktheory(const NqDesc& desc, bool run_checks);

CheckReport nq_checks(const NqDesc& desc, std::size_t depth);

}  // namespace zerok
