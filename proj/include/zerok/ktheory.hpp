#pragma once

// Assembly of K-groups from the homology of a resolution-induced complex.
// Exact for resolutions of length <= 2; length 3 yields K_0 only as an
// unresolved extension and requires H_3 = 0; longer resolutions come back
// undetermined with the homology attached.

#include <optional>
#include <string>
#include <vector>

#include "zerok/homology.hpp"

namespace zerok {

// Direct sum, renormalizing the invariant factors.
AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

// A K-group is either a group determined up to isomorphism or an unresolved
// extension 0 -> sub -> K -> quot -> 0.
struct KGroup {
  bool extension = false;
  AbGroup value;        // meaningful when !extension
  AbGroup sub, quot;    // meaningful when extension

  bool operator==(const KGroup&) const = default;
  std::string to_text() const;
};

struct KResult {
  std::optional<KGroup> k0;
  std::optional<KGroup> k1;
  std::string status;  // "exact" | "extension_ambiguous" | "undetermined"
  std::vector<std::string> notes;
};

// Assembles K_0 and K_1 from H_0..H_n (n = homology.size() - 1), valid for
// a free action with a resolution of length n:
//   n <= 1: K_0 = H_0, K_1 = H_1 (H_1 = 0 when n = 0).
//   n = 2:  K_0 = H_0 (+) H_2, K_1 = H_1 (H_2, as a top kernel, must be
//           free; torsion there is a structure_error).
//   n = 3, H_3 = 0: K_1 = H_1 and K_0 reported as the unresolved extension
//           0 -> H_0 -> K_0 -> H_2 -> 0, never split automatically.
//   n = 3, H_3 != 0: status "undetermined", homology attached in the notes.
//   n >= 4: status "undetermined", homology attached in the notes.
KResult assemble(const std::vector<AbGroup>& homology);

}  // namespace zerok
