#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "zerok/errors.hpp"
#include "zerok/group.hpp"
#include "zerok/semilattice.hpp"
#include "zerok/zcomb.hpp"

using namespace zerok;

namespace {

// e with two disjoint pieces f1, f2 below it.
TableSemilattice split_lattice() {
  std::vector<Elem> elems{"e", "f1", "f2"};
  std::map<std::pair<Elem, Elem>, Elem> table;
  for (const Elem& x : elems) table[{x, x}] = x;
  for (const char* f : {"f1", "f2"}) {
    table[{"e", f}] = f;
    table[{f, "e"}] = f;
  }
  return TableSemilattice("split", elems, table);
}

}  // namespace

TEST_CASE("table semilattice products and order") {
  TableSemilattice lat = split_lattice();
  CHECK(lat.product("e", "f1") == "f1");
  CHECK(lat.product("f1", "f2") == "");  // absent pairs multiply to zero
  CHECK(lat.contains("f2"));
  CHECK_FALSE(lat.contains("g"));
  CHECK(lat.leq("f1", "e"));
  CHECK(lat.strictly_below("f1", "e"));
  CHECK_FALSE(lat.strictly_below("e", "e"));
  CHECK(lat.leq("", "f1"));  // zero below everything
}

TEST_CASE("combination arithmetic is bilinear and cancels") {
  TableSemilattice lat = split_lattice();
  ZComb a = ZComb::basis(&lat, "e") - ZComb::basis(&lat, "f1");
  ZComb b = ZComb::basis(&lat, "f1", 2) + ZComb::basis(&lat, "f2");
  ZComb p = product(a, b);
  // (e - f1)(2 f1 + f2) = 2 f1 + f2 - 2 f1 - 0 = f2
  CHECK(p == ZComb::basis(&lat, "f2"));
  CHECK(p.coefficient("f1") == 0);
  ZComb zero = a - a;
  CHECK(zero.is_zero());
}

TEST_CASE("projections: e - join of a cover is idempotent") {
  TableSemilattice lat = split_lattice();
  ZComb j = join(&lat, {"f1", "f2"});
  // f1 f2 = 0, so the join is just the sum.
  CHECK(j == ZComb::basis(&lat, "f1") + ZComb::basis(&lat, "f2"));
  ZComb p = ZComb::basis(&lat, "e") - j;
  CHECK(product(p, p) == p);
  // Absorbing a dominated element: join({e, f1}) = e.
  CHECK(join(&lat, {"e", "f1"}) == ZComb::basis(&lat, "e"));
  CHECK(join(&lat, {}).is_zero());
}

TEST_CASE("support enumerates carriers in canonical order") {
  TableSemilattice lat = split_lattice();
  ZComb x = ZComb::basis(&lat, "f2") - ZComb::basis(&lat, "e", 3);
  CHECK(support(x) == std::vector<Elem>{"e", "f2"});
  CHECK(support(x - x).empty());
}

TEST_CASE("finite covers relative to a universe") {
  TableSemilattice lat = split_lattice();
  std::vector<Elem> universe{"e", "f1", "f2"};
  CHECK(is_finite_cover(&lat, {"f1", "f2"}, "e", universe));
  CHECK(is_finite_cover(&lat, {"e"}, "e", universe));
  // {f1} misses f2 <= e.
  CHECK_FALSE(is_finite_cover(&lat, {"f1"}, "e", universe));
  CHECK_FALSE(is_finite_cover(&lat, {}, "e", universe));
  // Members must lie below e.
  CHECK_FALSE(is_finite_cover(&lat, {"e"}, "f1", universe));
}

TEST_CASE("free group reduces words and serializes canonically") {
  FreeGroup g({"a", "b"});
  CHECK(g.elem({{"a", 1}, {"a", -1}}) == g.identity());
  CHECK(g.elem({{"a", 1}, {"b", 1}}) == "a.b");
  CHECK(g.elem({{"a", 1}, {"b", -1}}) == "a.b'");
  CHECK(g.mul("a.b", "b'.a") == "a.a");
  CHECK(g.inv("a.b'") == "b.a'");
  // Round trip through word().
  Word w = g.word("a.b'.a");
  CHECK(g.elem(w) == "a.b'.a");
  CHECK_THROWS_AS((void)g.elem({{"c", 1}}), input_error);
}

TEST_CASE("right-angled artin group normal form respects commutation") {
  RaagGroup g({"a", "b", "c"}, {{"a", "b"}});
  // a and b commute: both orders normalize the same way.
  CHECK(g.elem({{"b", 1}, {"a", 1}}) == g.elem({{"a", 1}, {"b", 1}}));
  // a and c do not.
  CHECK(g.elem({{"c", 1}, {"a", 1}}) != g.elem({{"a", 1}, {"c", 1}}));
  // Shuffle cancellation: b a b^{-1} = a.
  CHECK(g.elem({{"b", 1}, {"a", 1}, {"b", -1}}) == g.elem({{"a", 1}}));
  CHECK(g.mul(g.elem({{"a", 1}}), g.inv(g.elem({{"a", 1}}))) == g.identity());
  CHECK(g.commute("a", "b"));
  CHECK_FALSE(g.commute("a", "c"));
  CHECK_THROWS_AS(RaagGroup({"a"}, {{"a", "a"}}), input_error);
}

TEST_CASE("affine group composes maps exactly") {
  AffineGroup g({Int(2), Int(3)});
  CHECK(g.generators() == std::vector<std::string>{"t", "u2", "u3"});
  // t then u2: x -> 2(x + 1) = 2x + 2.
  std::string a = g.mul(g.elem({{"u2", 1}}), g.elem({{"t", 1}}));
  auto [r, q] = g.affine_of(a);
  CHECK(r == Rat(2));
  CHECK(q == Rat(2));
  // Inverse of x -> 2x + 2 is x -> x/2 - 1.
  auto [ri, qi] = g.affine_of(g.inv(a));
  CHECK(ri == Rat(-1));
  CHECK(qi == Rat(1, 2));
  CHECK(g.mul(a, g.inv(a)) == g.identity());
  // Canonical words reproduce the element.
  CHECK(g.elem(g.word(a)) == a);
  std::string half = g.elem_of(Rat(1, 3), Rat(1, 2));
  CHECK(g.elem(g.word(half)) == half);
}
