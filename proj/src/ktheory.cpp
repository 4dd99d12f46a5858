#include "zerok/ktheory.hpp"

#include "zerok/errors.hpp"

namespace zerok {

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
  std::vector<Int> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return make_ab_group(a.rank + b.rank, std::move(orders));
}

std::string KGroup::to_text() const {
  if (!extension) return value.to_text();
  return "extension: 0 -> " + sub.to_text() + " -> K -> " + quot.to_text() +
         " -> 0";
}

namespace {

std::string homology_note(const std::vector<AbGroup>& homology) {
  std::string out = "homology:";
  for (std::size_t k = 0; k < homology.size(); ++k)
    out += " H" + std::to_string(k) + " = " + homology[k].to_text() +
           (k + 1 < homology.size() ? "," : "");
  return out;
}

}  // namespace

KResult assemble(const std::vector<AbGroup>& homology) {
  if (homology.empty())
    throw input_error("assembly needs at least the degree-0 homology");
  const std::size_t n = homology.size() - 1;

  KResult result;
  auto exact = [&](const AbGroup& g) {
    KGroup k;
    k.value = g;
    return k;
  };

  if (n >= 4) {
    result.status = "undetermined";
    result.notes.push_back(
        "resolution length " + std::to_string(n) +
        " is outside the method's exact range (length <= 3); no K-groups "
        "are reported");
    result.notes.push_back(homology_note(homology));
    return result;
  }
  if (n <= 1) {
    result.k0 = exact(homology[0]);
    result.k1 = exact(n == 1 ? homology[1] : AbGroup{});
    result.status = "exact";
    return result;
  }
  if (n == 2) {
    // The top homology of a length-2 resolution is the kernel of the top
    // boundary, hence free; torsion here means the input groups cannot have
    // come from a complex.
    if (!homology[2].is_free())
      throw structure_error(
          "top homology of a length-2 resolution must be free; got " +
          homology[2].to_text());
    result.k0 = exact(direct_sum(homology[0], homology[2]));
    result.k1 = exact(homology[1]);
    result.status = "exact";
    result.notes.push_back("K0 = H0 (+) H2 (top homology is free, splitting "
                           "the assembly filtration)");
    return result;
  }
  // n == 3
  if (!homology[3].is_trivial()) {
    result.status = "undetermined";
    result.notes.push_back("H3 != 0: the length-3 assembly needs vanishing "
                           "top homology; no K-groups are reported");
    result.notes.push_back(homology_note(homology));
    return result;
  }
  result.k1 = exact(homology[1]);
  KGroup k;
  k.extension = true;
  k.sub = homology[0];
  k.quot = homology[2];
  result.k0 = k;
  result.status = "extension_ambiguous";
  result.notes.push_back("K0 is an extension 0 -> H0 -> K0 -> H2 -> 0 that "
                         "the method does not resolve");
  return result;
}

}  // namespace zerok
