#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "zerok/action.hpp"
#include "zerok/covers.hpp"
#include "zerok/errors.hpp"
#include "zerok/group.hpp"
#include "zerok/semilattice.hpp"

using namespace zerok;

namespace {

// e with two disjoint pieces f1, f2; s swaps the pieces.
struct SplitCoverSystem {
  TableSemilattice lat;
  FreeGroup group;
  PartialAction act;
  CoverSystem covers;
  std::vector<Elem> universe{"e", "f1", "f2"};

  explicit SplitCoverSystem(bool with_swap = true)
      : lat(make_lat()), group(with_swap ? std::vector<std::string>{"s"}
                                         : std::vector<std::string>{}) {
    act.group = &group;
    act.lat = &lat;
    act.step = [](const Letter& l, const Elem& e) -> Elem {
      if (l.sign > 0) return e == "f1" ? "f2" : "";
      return e == "f2" ? "f1" : "";
    };
    act.domain = [](const Letter& l) -> Elem {
      return l.sign > 0 ? "f1" : "f2";
    };
    covers.lat = &lat;
    covers.covers = [](const Elem& e) -> std::vector<std::vector<Elem>> {
      if (e == "e") return {{"f1", "f2"}};
      return {};
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

bool has_failure(const CheckReport& r, const std::string& condition) {
  return std::any_of(r.records.begin(), r.records.end(),
                     [&](const CheckRecord& rec) {
                       return rec.condition == condition &&
                              rec.verdict == Verdict::fail;
                     });
}

}  // namespace

TEST_CASE("a well-formed system passes all four conditions") {
  SplitCoverSystem s;
  CheckReport r = check_all(s.covers, s.act, s.universe, 2);
  CHECK(r.all_passed());
  CHECK_FALSE(r.any_failed());
  // Summary lines mention each condition.
  std::string text = report_to_text(r);
  for (const char* c : {"condition i:", "condition ii:", "condition iii:",
                        "condition iv:"})
    CHECK(text.find(c) != std::string::npos);
}

TEST_CASE("a deleted cover member breaks condition iv") {
  SplitCoverSystem s;
  s.covers.covers = [](const Elem& e) -> std::vector<std::vector<Elem>> {
    if (e == "e") return {{"f1"}};  // f2 <= e meets nothing
    return {};
  };
  CheckReport r = check_condition_iv(s.covers, s.universe);
  REQUIRE(has_failure(r, "iv"));
  // The witness names the uncovered element or the broken cover's base.
  bool mentions = false;
  for (const auto& rec : r.records)
    if (rec.verdict == Verdict::fail)
      mentions = mentions ||
                 std::count(rec.witness.begin(), rec.witness.end(), "e") > 0;
  CHECK(mentions);
}

TEST_CASE("a self-cover breaks condition ii") {
  SplitCoverSystem s;
  s.covers.covers = [](const Elem& e) -> std::vector<std::vector<Elem>> {
    if (e == "e") return {{"f1", "f2"}, {Elem("e")}};
    return {};
  };
  CheckReport r = check_condition_ii(s.covers, s.universe);
  REQUIRE(has_failure(r, "ii"));
  // But i and iv still hold for this mutant.
  CHECK_FALSE(check_condition_i(s.covers, s.universe).any_failed());
  CHECK_FALSE(check_condition_iv(s.covers, s.universe).any_failed());
}

TEST_CASE("a missing translated cover breaks condition iii") {
  SplitCoverSystem s;
  s.covers.covers = [](const Elem& e) -> std::vector<std::vector<Elem>> {
    if (e == "e") return {{"f1", "f2"}};
    if (e == "f1") return {{Elem("f1")}};  // theta_s carries this to f2 ...
    return {};                             // ... where no cover exists
  };
  CheckReport r = check_condition_iii(s.covers, s.act, s.universe, 2);
  REQUIRE(has_failure(r, "iii"));
}

TEST_CASE("condition i sees translated covers") {
  SplitCoverSystem s;
  CheckReport r = check_condition_i(s.covers, s.universe);
  CHECK(r.all_passed());
  // Covering an element that d shrinks to a singleton: (f1 . {f1,f2})^x =
  // {f1} must contain f1 . e = f1 -- exercised above; now break it by
  // covering f1 with something d cannot reach.
  s.covers.covers = [](const Elem& e) -> std::vector<std::vector<Elem>> {
    if (e == "e") return {{"f1", "f2"}, {Elem("e")}};
    return {};
  };
  // d = f1, R = {e}: (f1 . {e})^x = {f1}, f1 in it -- fine; the system is
  // still condition-i clean even though ii fails.
  CHECK(check_condition_i(s.covers, s.universe).all_passed());
}

TEST_CASE("resolution over singleton orbits") {
  SplitCoverSystem s(/*with_swap=*/false);
  ResolutionLevels res = build_resolution(s.covers, s.act, s.universe, 2);
  REQUIRE(res.levels.size() == 3);
  CHECK(res.levels[0].size() == 3);  // e, f1, f2
  REQUIRE(res.levels[1].size() == 1);
  CHECK(res.levels[1][0].label == "e#1");
  CHECK(res.levels[2].empty());  // a single cover admits no pairs

  ChainComplex c = res.complex();
  c.validate();
  // Trailing empty level is trimmed.
  REQUIRE(c.ranks == std::vector<std::size_t>{3, 1});
  REQUIRE(c.labels[0] == std::vector<std::string>{"e", "f1", "f2"});
  // d1(e#1) = e - f1 - f2.
  CHECK(c.boundaries[0].at(0, 0) == 1);
  CHECK(c.boundaries[0].at(1, 0) == -1);
  CHECK(c.boundaries[0].at(2, 0) == -1);
}

TEST_CASE("resolution folds orbits through the action") {
  SplitCoverSystem s;
  ResolutionLevels res = build_resolution(s.covers, s.act, s.universe, 2);
  CHECK(res.levels[0].size() == 2);  // orbits {e}, {f1, f2}
  CHECK(res.orbit_decomposition.representative("f2") == "f1");
  ChainComplex c = res.complex();
  REQUIRE(c.ranks == std::vector<std::size_t>{2, 1});
  // e - f1 - f2 collapses to e - 2 f1 on representatives.
  CHECK(c.boundaries[0].at(0, 0) == 1);
  CHECK(c.boundaries[0].at(1, 0) == -2);
}

TEST_CASE("resolutions beyond level two are refused") {
  SplitCoverSystem s;
  CHECK_THROWS_AS(build_resolution(s.covers, s.act, s.universe, 3),
                  refusal_error);
}
