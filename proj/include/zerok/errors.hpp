#pragma once

// Error hierarchy.  Input problems (malformed descriptions, out-of-domain
// arguments) and structural problems (mixing elements of different
// semilattices, a non-closed universe, an inconsistent basis) are kept apart
// from mathematical refusals, where the requested computation is well posed
// but outside what the library can answer exactly.

#include <stdexcept>
#include <string>

namespace zerok {

// Malformed or out-of-domain input: wrong JSON shape, unknown symbols,
// indices out of range, dimension mismatches.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Violated structural preconditions: elements from different semilattices
// combined, universes that are not closed under the operations performed on
// them, expansions that do not lie in the span of a basis.
class structure_error : public std::logic_error {
 public:
  explicit structure_error(const std::string& what) : std::logic_error(what) {}
};

// The computation is understood but refused: the method is only exact in a
// range that the request leaves (for example K-group assembly in homological
// degree >= 4, or resolutions beyond level 2).
class refusal_error : public std::runtime_error {
 public:
  explicit refusal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zerok
