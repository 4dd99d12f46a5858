#pragma once

// Discrete groups acting on semilattices.  Group elements, like semilattice
// elements, travel as canonical serializations; each group knows how to turn
// an element back into a word in the generators so that partial actions can
// be applied one letter at a time.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zerok/integers.hpp"

namespace zerok {

// One letter of a word: a generator name with an exponent of +1 or -1.
struct Letter {
  std::string gen;
  int sign = 1;

  bool operator==(const Letter&) const = default;
  Letter inverse() const { return {gen, -sign}; }
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);

class Group {
 public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual std::vector<std::string> generators() const = 0;

  // Canonical serialization of the element represented by a word.
  virtual std::string elem(const Word& w) const = 0;

  // A word (in general not unique; here, a fixed canonical choice)
  // representing a serialized element.
  virtual Word word(const std::string& g) const = 0;

  std::string identity() const { return elem({}); }
  bool is_identity(const std::string& g) const { return g == identity(); }
  std::string mul(const std::string& a, const std::string& b) const;
  std::string inv(const std::string& a) const;
};

// Free group on a finite set of generators.  Canonical form: the freely
// reduced word, serialized as dot-separated letters with a trailing
// apostrophe marking inverses, e.g. "a.b'.a".
class FreeGroup final : public Group {
 public:
  explicit FreeGroup(std::vector<std::string> gens);

  std::string name() const override { return "free"; }
  std::vector<std::string> generators() const override { return gens_; }
  std::string elem(const Word& w) const override;
  Word word(const std::string& g) const override;

 private:
  std::vector<std::string> gens_;
  std::set<std::string> gen_set_;
};

// Right-angled Artin group: free group modulo commutation of the generator
// pairs listed in `commuting`.  Canonical form: the lexicographically least
// geodesic word (greedy normal form after full shuffle reduction).
class RaagGroup final : public Group {
 public:
  RaagGroup(std::vector<std::string> gens,
            std::set<std::pair<std::string, std::string>> commuting);

  std::string name() const override { return "raag"; }
  std::vector<std::string> generators() const override { return gens_; }
  std::string elem(const Word& w) const override;
  Word word(const std::string& g) const override;

  bool commute(const std::string& a, const std::string& b) const;

 private:
  Word reduce(Word w) const;

  std::vector<std::string> gens_;
  std::set<std::string> gen_set_;
  std::set<std::pair<std::string, std::string>> commuting_;
};

// The group of affine maps x -> q x + r with q a (signed-exponent) product
// of fixed primes and r in Z[1/(p_1...p_n)].  Generated by the unit
// translation t: x -> x + 1 and one scaling u_i: x -> p_i x per prime.
class AffineGroup final : public Group {
 public:
  explicit AffineGroup(std::vector<Int> primes);

  std::string name() const override { return "affine"; }
  std::vector<std::string> generators() const override;
  std::string elem(const Word& w) const override;
  Word word(const std::string& g) const override;

  // Serialization of the map x -> q x + r.
  std::string elem_of(const Rat& r, const Rat& q) const;
  // Inverse of elem_of.
  std::pair<Rat, Rat> affine_of(const std::string& g) const;

  const std::vector<Int>& primes() const { return primes_; }

 private:
  std::vector<Int> primes_;
};

}  // namespace zerok
