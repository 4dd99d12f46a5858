#include "zerok/covers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zerok/errors.hpp"

namespace zerok {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool CheckReport::all_passed() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.verdict == Verdict::pass; });
}

bool CheckReport::any_failed() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.verdict == Verdict::fail; });
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  for (const CheckRecord& rec : r.records) {
    os << "condition " << rec.condition << ": " << to_string(rec.verdict);
    if (!rec.witness.empty()) {
      os << " [";
      for (std::size_t i = 0; i < rec.witness.size(); ++i)
        os << (i ? ", " : "") << rec.witness[i];
      os << "]";
    }
    if (!rec.detail.empty()) os << " -- " << rec.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

std::string join_elems(const std::vector<Elem>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

std::vector<Elem> sorted_copy(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void summary(CheckReport& report, const std::string& condition,
             std::size_t checked, const std::string& note) {
  CheckRecord rec;
  rec.condition = condition;
  rec.verdict = report.any_failed() ? Verdict::fail : Verdict::pass;
  rec.detail = std::to_string(checked) + " instance(s) checked" +
               (note.empty() ? "" : "; " + note);
  report.records.push_back(std::move(rec));
}

}  // namespace

CheckReport check_condition_i(const CoverSystem& sys,
                              const std::vector<Elem>& universe) {
  const Semilattice* lat = sys.lat;
  CheckReport report;
  std::size_t checked = 0;
  for (const Elem& e : universe) {
    auto covers_e = sys.covers(e);
    if (covers_e.empty()) continue;
    for (const Elem& d : universe) {
      Elem de = lat->product(d, e);
      if (is_zero(de)) continue;
      auto covers_de = sys.covers(de);
      std::set<std::vector<Elem>> covers_de_sets;
      for (auto& R : covers_de) covers_de_sets.insert(sorted_copy(R));
      for (const auto& R : covers_e) {
        ++checked;
        // (d R)^x : translated cover with zero products removed
        std::set<Elem> translated;
        for (const Elem& r : R) {
          Elem dr = lat->product(d, r);
          if (!is_zero(dr)) translated.insert(dr);
        }
        if (translated.count(de)) continue;  // de itself appears
        std::vector<Elem> tvec(translated.begin(), translated.end());
        if (covers_de_sets.count(tvec)) continue;  // member of S(de)
        CheckRecord rec;
        rec.condition = "i";
        rec.witness = {d, e};
        rec.witness.insert(rec.witness.end(), R.begin(), R.end());
        rec.verdict = Verdict::fail;
        rec.detail = "translate " + join_elems(tvec) +
                     " neither contains " + de + " nor belongs to S(" + de + ")";
        report.records.push_back(std::move(rec));
      }
    }
  }
  summary(report, "i", checked, "");
  return report;
}

namespace {

// All r-element index subsets of {0..n-1}.
void index_subsets(std::size_t n, std::size_t r,
                   std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

CheckReport check_condition_ii(const CoverSystem& sys,
                               const std::vector<Elem>& universe) {
  const Semilattice* lat = sys.lat;
  CheckReport report;
  std::size_t checked = 0;
  for (const Elem& e : universe) {
    auto covers_e = sys.covers(e);
    if (covers_e.empty()) continue;
    // Candidate eps_i per cover: support of the join combination.
    std::vector<std::vector<Elem>> candidates(covers_e.size());
    for (std::size_t i = 0; i < covers_e.size(); ++i)
      candidates[i] = support(join(lat, covers_e[i]));

    for (std::size_t r = 1; r <= covers_e.size(); ++r) {
      std::vector<std::vector<std::size_t>> subsets;
      index_subsets(covers_e.size(), r, subsets);
      for (const auto& subset : subsets) {
        // Walk all choices (eps_i) for i in subset.
        std::vector<std::size_t> choice(r, 0);
        for (;;) {
          std::vector<Elem> eps(r);
          bool viable = true;
          for (std::size_t i = 0; i < r && viable; ++i) {
            if (candidates[subset[i]].empty()) viable = false;
            else eps[i] = candidates[subset[i]][choice[i]];
          }
          if (!viable) break;
          ++checked;
          // Products over all of eps and with one factor removed.
          Elem full = eps[0];
          for (std::size_t i = 1; i < r && !is_zero(full); ++i)
            full = lat->product(full, eps[i]);
          for (std::size_t j = 0; j < r; ++j) {
            Elem partial;  // product over i != j; e itself when r = 1
            if (r == 1) {
              partial = e;
            } else {
              bool first = true;
              for (std::size_t i = 0; i < r; ++i) {
                if (i == j) continue;
                partial = first ? eps[i] : lat->product(partial, eps[i]);
                first = false;
                if (is_zero(partial)) break;
              }
            }
            if (is_zero(partial)) continue;
            // Need full strictly below partial; full <= partial always, so
            // only equality can go wrong (zero full is strictly below).
            if (!is_zero(full) && full == partial) {
              CheckRecord rec;
              rec.condition = "ii";
              rec.witness = {e};
              rec.witness.insert(rec.witness.end(), eps.begin(), eps.end());
              rec.verdict = Verdict::fail;
              rec.detail = "product " + full +
                           " is not strictly below the product omitting "
                           "factor " + std::to_string(j + 1);
              report.records.push_back(std::move(rec));
            }
          }
          // Advance the mixed-radix choice counter.
          std::size_t pos = 0;
          while (pos < r) {
            if (++choice[pos] < candidates[subset[pos]].size()) break;
            choice[pos] = 0;
            ++pos;
          }
          if (pos == r) break;
        }
      }
    }
  }
  summary(report, "ii", checked, "candidates drawn from join supports");
  return report;
}

CheckReport check_condition_iii(const CoverSystem& sys, const PartialAction& act,
                                const std::vector<Elem>& universe,
                                std::size_t depth) {
  const Group& G = *act.group;
  CheckReport report;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  std::vector<Letter> letters;
  for (const auto& gen : G.generators()) {
    letters.push_back({gen, 1});
    letters.push_back({gen, -1});
  }
  std::set<std::string> seen{G.identity()};
  std::vector<std::string> frontier{G.identity()};
  std::vector<std::string> group_elems;
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto& g : frontier)
      for (const auto& l : letters) {
        std::string h = G.mul(g, G.elem({l}));
        if (seen.insert(h).second) {
          next.push_back(h);
          group_elems.push_back(h);
        }
      }
    frontier = std::move(next);
  }

  for (const std::string& g : group_elems) {
    Word w = G.word(g);
    for (const Elem& e : universe) {
      Elem ge = act.apply_word(w, e);
      if (is_zero(ge)) continue;  // e outside the domain of theta_g
      ++checked;
      auto covers_e = sys.covers(e);
      auto covers_ge = sys.covers(ge);
      // Translate S(e) through theta_g.
      std::set<std::vector<Elem>> translated;
      bool complete = true;
      for (const auto& R : covers_e) {
        std::vector<Elem> tr;
        for (const Elem& r : R) {
          Elem gr = act.apply_word(w, r);
          if (is_zero(gr)) {
            complete = false;
            break;
          }
          tr.push_back(gr);
        }
        if (!complete) break;
        translated.insert(sorted_copy(tr));
      }
      if (!complete) {
        ++skipped;
        CheckRecord rec;
        rec.condition = "iii";
        rec.witness = {g, e};
        rec.verdict = Verdict::inconclusive;
        rec.detail = "a cover member leaves the truncated domain of theta_g";
        report.records.push_back(std::move(rec));
        continue;
      }
      std::set<std::vector<Elem>> expected;
      for (const auto& R : covers_ge) expected.insert(sorted_copy(R));
      if (translated != expected) {
        CheckRecord rec;
        rec.condition = "iii";
        rec.witness = {g, e, ge};
        rec.verdict = Verdict::fail;
        rec.detail = "theta_g(S(" + e + ")) != S(" + ge + ")";
        report.records.push_back(std::move(rec));
      }
    }
  }
  std::ostringstream note;
  note << "group elements of word length <= " << depth << " only";
  if (skipped) note << "; " << skipped << " pair(s) skipped at the truncation boundary";
  summary(report, "iii", checked, note.str());
  return report;
}

CheckReport check_condition_iv(const CoverSystem& sys,
                               const std::vector<Elem>& universe) {
  CheckReport report;
  std::size_t checked = 0;
  std::size_t max_covers = 0;
  for (const Elem& e : universe) {
    auto covers_e = sys.covers(e);
    max_covers = std::max(max_covers, covers_e.size());
    for (std::size_t i = 0; i < covers_e.size(); ++i) {
      ++checked;
      if (!is_finite_cover(sys.lat, covers_e[i], e, universe)) {
        CheckRecord rec;
        rec.condition = "iv";
        rec.witness = {e};
        rec.witness.insert(rec.witness.end(), covers_e[i].begin(),
                           covers_e[i].end());
        rec.verdict = Verdict::fail;
        rec.detail = "cover " + std::to_string(i + 1) + " of " + e +
                     " misses part of the element";
        report.records.push_back(std::move(rec));
      }
    }
  }
  summary(report, "iv", checked,
          "at most " + std::to_string(max_covers) + " cover(s) per element");
  return report;
}

CheckReport check_all(const CoverSystem& sys, const PartialAction& act,
                      const std::vector<Elem>& universe, std::size_t depth) {
  CheckReport report;
  for (auto part : {check_condition_i(sys, universe),
                    check_condition_ii(sys, universe),
                    check_condition_iii(sys, act, universe, depth),
                    check_condition_iv(sys, universe)})
    report.records.insert(report.records.end(), part.records.begin(),
                          part.records.end());
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string tag_of(const std::vector<std::size_t>& indices, bool level2) {
  std::ostringstream os;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) os << (level2 ? "|" : ",");
    os << indices[i] + 1;
  }
  return os.str();
}

}  // namespace

std::string ResolutionLevels::key_to_rep(const std::string& key) const {
  auto it = rep_of_key_.find(key);
  if (it == rep_of_key_.end())
    throw structure_error("key '" + key + "' does not name a resolution generator");
  return it->second;
}

IntMatrix ResolutionLevels::boundary(std::size_t k) const {
  if (k == 0 || k >= levels.size())
    throw input_error("no boundary in degree " + std::to_string(k));
  // The solve basis is formal: level-(k-1) generators as their own keys.
  // Level-k expansions are keyed by elements (k = 1) or level-1 generator
  // keys (k = 2); key_to_rep lands both in exactly these labels.
  std::vector<LabelledExpansion> basis, gens;
  for (const auto& g : levels[k - 1])
    basis.push_back({g.label, Expansion{{g.label, 1}}});
  for (const auto& g : levels[k]) gens.push_back({g.label, g.expansion});
  return boundary_from_expansions(basis, gens,
                                  [this](const std::string& key) { return key_to_rep(key); });
}

ChainComplex ResolutionLevels::complex() const {
  ChainComplex c;
  std::size_t top = levels.size();
  while (top > 1 && levels[top - 1].empty()) --top;  // trim empty tail levels
  for (std::size_t k = 0; k < top; ++k) {
    c.ranks.push_back(levels[k].size());
    std::vector<std::string> names;
    for (const auto& g : levels[k]) names.push_back(g.label);
    c.labels.push_back(std::move(names));
    if (k > 0) c.boundaries.push_back(boundary(k));
  }
  c.validate();
  return c;
}

ResolutionLevels build_resolution(const CoverSystem& sys,
                                  const PartialAction& act,
                                  const std::vector<Elem>& universe,
                                  std::size_t max_level) {
  if (max_level > 2)
    throw refusal_error("resolution generators beyond level 2 are not "
                        "constructed: no exact finite recipe is implemented");
  const Semilattice* lat = sys.lat;
  ResolutionLevels out;
  out.orbit_decomposition = orbits(act, universe);
  const Orbits& orb = out.orbit_decomposition;

  for (const Elem& e : universe)
    if (e.find('#') != std::string::npos)
      throw input_error("element serializations must not contain '#'");

  // Level 0: orbit representatives.
  out.levels.emplace_back();
  for (const auto& cls : orb.classes) {
    ResolutionGenerator g;
    g.label = cls.front();
    g.base = cls.front();
    g.expansion[g.base] = 1;
    out.levels.back().push_back(std::move(g));
  }
  for (const auto& cls : orb.classes)
    for (const Elem& e : cls) out.rep_of_key_[e] = cls.front();
  if (max_level == 0) return out;

  // Level-1 expansion of (e, T): prod_{i in T} (e - join(S(e)[i])).
  auto level1_comb = [&](const Elem& e,
                         const std::vector<std::vector<Elem>>& covers_e,
                         const std::vector<std::size_t>& T) {
    ZComb acc = ZComb::basis(lat, e);
    for (std::size_t i : T) {
      ZComb factor = ZComb::basis(lat, e) - join(lat, covers_e[i]);
      acc = product(acc, factor);
    }
    return acc;
  };

  // Verify p * p = p for a stored combination.
  auto require_projection = [&](const ZComb& p, const std::string& label) {
    if (!(product(p, p) == p))
      throw structure_error("expansion of '" + label + "' is not a projection");
  };

  // Level 1: nonempty subsets of the covers of each representative, in
  // subset-size-then-lex order restricted to the tags that stay nonzero.
  out.levels.emplace_back();
  std::size_t max_covers = 0;
  for (const auto& g0 : out.levels[0])
    max_covers = std::max(max_covers, sys.covers(g0.base).size());

  // Enumerate all nonempty index subsets in (size, lex) order once.
  std::vector<std::vector<std::size_t>> all_subsets;
  for (std::size_t r = 1; r <= max_covers; ++r) index_subsets(max_covers, r, all_subsets);
  // Reorder: for a fixed representative the tags run {1},{2},..,{1,2},...
  std::stable_sort(all_subsets.begin(), all_subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  for (const auto& g0 : out.levels[0]) {
    auto covers_e = sys.covers(g0.base);
    for (const auto& T : all_subsets) {
      if (!T.empty() && T.back() >= covers_e.size()) continue;
      ZComb comb = level1_comb(g0.base, covers_e, T);
      std::string key = g0.base + "#" + tag_of(T, false);
      if (comb.is_zero()) {
        out.rep_of_key_[key] = "";  // vanished: references drop out
        continue;
      }
      require_projection(comb, key);
      ResolutionGenerator g;
      g.label = key;
      g.base = g0.base;
      g.cover_indices = T;
      for (const auto& [elem, c] : comb.terms()) g.expansion[elem] = c;
      out.levels.back().push_back(std::move(g));
      out.rep_of_key_[key] = key;
    }
  }
  // Keys of level-1 generators at non-representative elements resolve to the
  // generator at the orbit representative.
  for (const auto& cls : orb.classes)
    for (const Elem& e : cls)
      for (const auto& T : all_subsets) {
        if (T.empty()) continue;
        if (T.back() >= sys.covers(e).size()) continue;
        std::string key = e + "#" + tag_of(T, false);
        if (out.rep_of_key_.count(key)) continue;
        out.rep_of_key_[key] = out.rep_of_key_.at(cls.front() + "#" + tag_of(T, false));
      }
  if (max_level == 1) return out;

  // Level 2: ordered pairs (i, j) of distinct cover indices:
  //   p(e | i!j) = p(e|i) - p(e|{i,j}) - sum_{f in S(e)[j]} p(f|i),
  // stored as a formal combination over level-1 keys; pushing the expansion
  // down to E must give exactly zero (this is d1 d2 = 0 at the source).
  out.levels.emplace_back();
  for (const auto& g0 : out.levels[0]) {
    auto covers_e = sys.covers(g0.base);
    if (covers_e.size() < 2) continue;
    for (std::size_t i = 0; i < covers_e.size(); ++i) {
      for (std::size_t j = 0; j < covers_e.size(); ++j) {
        if (i == j) continue;
        ResolutionGenerator g;
        g.base = g0.base;
        g.cover_indices = {i, j};
        g.label = g0.base + "#" + tag_of({i, j}, true);
        std::string pair_tag =
            tag_of({std::min(i, j), std::max(i, j)}, false);
        g.expansion[g0.base + "#" + tag_of({i}, false)] += 1;
        g.expansion[g0.base + "#" + pair_tag] -= 1;
        for (const Elem& f : covers_e[j]) {
          if (sys.covers(f).size() <= i)
            throw structure_error("cover member '" + f +
                                  "' lacks cover index " + std::to_string(i + 1) +
                                  " required by level-2 generator '" + g.label + "'");
          g.expansion[f + "#" + tag_of({i}, false)] -= 1;
        }

        // Push down to E and verify exact cancellation.
        ZComb push(lat);
        for (const auto& [key, c] : g.expansion) {
          std::size_t hash = key.rfind('#');
          Elem base = key.substr(0, hash);
          std::string tag = key.substr(hash + 1);
          auto covers_f = sys.covers(base);
          std::vector<std::size_t> T;
          std::size_t start = 0;
          while (start < tag.size()) {
            std::size_t comma = tag.find(',', start);
            std::string num = tag.substr(
                start, comma == std::string::npos ? comma : comma - start);
            T.push_back(static_cast<std::size_t>(std::stoul(num)) - 1);
            if (comma == std::string::npos) break;
            start = comma + 1;
          }
          push += c * level1_comb(base, covers_f, T);
        }
        if (!push.is_zero())
          throw structure_error("level-2 expansion of '" + g.label +
                                "' does not push down to zero in the "
                                "combination ring");

        // Keys referencing vanished level-1 generators resolve to ""; keys at
        // elements outside the enumerated universe stay unresolved (boundary
        // computations over them fail loudly).  A generator whose every key
        // vanished is dropped itself.
        bool all_gone = true;
        for (const auto& [key, c] : g.expansion) {
          auto it = out.rep_of_key_.find(key);
          if (it == out.rep_of_key_.end() || !it->second.empty()) {
            all_gone = false;
            break;
          }
        }
        std::string key = g.label;
        if (all_gone) {
          out.rep_of_key_[key] = "";
          continue;
        }
        out.rep_of_key_[key] = key;
        out.levels.back().push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace zerok
