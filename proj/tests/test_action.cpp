#include <doctest.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zerok/action.hpp"
#include "zerok/errors.hpp"
#include "zerok/group.hpp"
#include "zerok/semilattice.hpp"

using namespace zerok;

namespace {

// e with two disjoint pieces f1, f2; the letter s carries f1 to f2.
struct SwapSystem {
  TableSemilattice lat;
  FreeGroup group;
  PartialAction act;

  SwapSystem() : lat(make_lat()), group({"s"}) {
    act.group = &group;
    act.lat = &lat;
    act.step = [](const Letter& l, const Elem& e) -> Elem {
      if (l.sign > 0) return e == "f1" ? "f2" : "";
      return e == "f2" ? "f1" : "";
    };
    act.domain = [](const Letter& l) -> Elem {
      return l.sign > 0 ? "f1" : "f2";
    };
  }

  static TableSemilattice make_lat() {
    std::vector<Elem> elems{"e", "f1", "f2"};
    std::map<std::pair<Elem, Elem>, Elem> table;
    for (const Elem& x : elems) table[{x, x}] = x;
    for (const char* f : {"f1", "f2"}) {
      table[{"e", f}] = f;
      table[{f, "e"}] = f;
    }
    return TableSemilattice("split", elems, table);
  }
};

}  // namespace

TEST_CASE("words act letter by letter with domains respected") {
  SwapSystem s;
  CHECK(s.act.apply("s", "f1") == "f2");
  CHECK(s.act.apply("s'", "f2") == "f1");
  CHECK(s.act.apply("s", "e") == "");    // e is not below the domain
  CHECK(s.act.apply("s", "f2") == "");   // outside the domain ideal
  CHECK(s.act.apply("s.s", "f1") == ""); // second step leaves the domain
  CHECK(s.act.apply(s.group.identity(), "f1") == "f1");

  // Restriction first: e * d(s) = f1, then the step applies.
  CHECK(s.act.apply_restricted({{"s", 1}}, "e") == "f2");
  CHECK(s.act.apply_restricted({{"s", -1}}, "e") == "f1");
}

TEST_CASE("enveloping elements canonicalize by unwinding the group part") {
  SwapSystem s;
  // [s, f1] presents the same class as [1, f2].
  EnvElem c = env_canonical(s.act, {"s", "f1"});
  CHECK(c == EnvElem{s.group.identity(), "f2"});
  // [s, f2] cannot be unwound: s does not act on f2.
  EnvElem d = env_canonical(s.act, {"s", "f2"});
  CHECK(d == EnvElem{"s", "f2"});

  // Products restrict the second factor into the first factor's chart.
  auto p = env_product(s.act, {s.group.identity(), "e"}, {"s", "f1"});
  REQUIRE(p.has_value());
  CHECK(*p == EnvElem{s.group.identity(), "f2"});
  // Disjoint pieces meet in zero.
  auto z = env_product(s.act, {s.group.identity(), "f1"},
                       {s.group.identity(), "f2"});
  CHECK_FALSE(z.has_value());

  // Dilation then canonicalization: tau_s [1, f1] = [s, f1] ~ [1, f2].
  EnvElem t = dilate(s.act, "s", {s.group.identity(), "f1"});
  CHECK(t == EnvElem{s.group.identity(), "f2"});
}

TEST_CASE("orbit decomposition under single-letter moves") {
  SwapSystem s;
  Orbits o = orbits(s.act, {"e", "f1", "f2"});
  REQUIRE(o.classes.size() == 2);
  CHECK(o.classes[0] == std::vector<Elem>{"e"});
  CHECK(o.classes[1] == std::vector<Elem>{"f1", "f2"});
  CHECK(o.representative("f2") == "f1");
  CHECK(o.representative("e") == "e");
  CHECK_THROWS_AS((void)o.representative("nope"), input_error);

  // A universe that a letter leads out of is rejected loudly.
  CHECK_THROWS_AS(orbits(s.act, std::vector<Elem>{"f1"}), structure_error);
}

TEST_CASE("freeness search reports violations with witnesses") {
  SwapSystem s;
  FreeActionReport ok = free_action_check(s.act, {"e", "f1", "f2"}, 3);
  CHECK(ok.free_up_to_depth());
  CHECK(ok.depth == 3);
  CHECK(ok.elements_checked == 3);
  CHECK(ok.group_elements_checked > 0);

  // A letter fixing f1 produces a named witness.
  PartialAction fix = s.act;
  fix.step = [](const Letter& l, const Elem& e) -> Elem {
    (void)l;
    return e == "f1" ? "f1" : "";
  };
  fix.domain = [](const Letter&) -> Elem { return "f1"; };
  FreeActionReport bad = free_action_check(fix, {"e", "f1", "f2"}, 2);
  REQUIRE_FALSE(bad.free_up_to_depth());
  CHECK(bad.violations[0].e == "f1");
  CHECK(bad.violations[0].g == "s");
}
