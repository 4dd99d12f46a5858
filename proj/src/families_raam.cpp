#include "zerok/families.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zerok/errors.hpp"

namespace zerok {

namespace {

// Positive traces of the monoid: canonical normal forms are computed by the
// group's reduction (positive words never cancel, so the group normal form
// of a positive word is the trace normal form).
class TraceMonoid {
 public:
  TraceMonoid(std::vector<std::string> gens,
              std::set<std::pair<std::string, std::string>> commuting)
      : group_(gens, commuting), gens_(std::move(gens)) {}

  const RaagGroup& group() const { return group_; }
  const std::vector<std::string>& gens() const { return gens_; }

  std::vector<std::string> tokens(const std::string& trace) const {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= trace.size() && !trace.empty()) {
      auto dot = trace.find('.', start);
      out.push_back(trace.substr(
          start, dot == std::string::npos ? std::string::npos : dot - start));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return out;
  }

  std::string canonical(const std::vector<std::string>& toks) const {
    Word w;
    for (const std::string& t : toks) w.push_back({t, 1});
    return group_.elem(w);
  }

  // Is `trace` a valid canonical positive trace?
  bool valid(const std::string& trace) const {
    if (trace.empty()) return true;
    auto toks = tokens(trace);
    for (const std::string& t : toks)
      if (std::find(gens_.begin(), gens_.end(), t) == gens_.end())
        return false;
    return canonical(toks) == trace;
  }

  // Positions of the letters that can be moved to the front: every earlier
  // letter commutes with them.
  std::vector<std::size_t> floor_positions(
      const std::vector<std::string>& toks) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j)
        if (!group_.commute(toks[j], toks[i])) {
          ok = false;
          break;
        }
      if (ok) out.push_back(i);
    }
    return out;
  }

  // Left divisibility q | r.  A trace divides another exactly when its first
  // normal-form letter lies in the divisor's floor and the quotients by that
  // letter divide again.
  bool divides(std::vector<std::string> q, std::vector<std::string> r) const {
    while (!q.empty()) {
      if (q.size() > r.size()) return false;
      const std::string& l = q.front();
      bool found = false;
      for (std::size_t i : floor_positions(r)) {
        if (r[i] == l) {
          r.erase(r.begin() + static_cast<long>(i));
          found = true;
          break;
        }
      }
      if (!found) return false;
      q.erase(q.begin());
    }
    return true;
  }

  // Least common multiple for left divisibility, or nullopt when p and q
  // have no common multiple.  Searches multiples of p by length; a common
  // multiple of |p| + |q| letters always exists when any does.
  std::optional<std::string> lcm(const std::string& p,
                                 const std::string& q) const {
    auto qt = tokens(q);
    std::vector<std::string> frontier{p};
    std::set<std::string> seen{p};
    std::size_t bound = tokens(p).size() + qt.size();
    for (std::size_t len = tokens(p).size(); len <= bound; ++len) {
      std::vector<std::string> hits;
      for (const std::string& cand : frontier)
        if (divides(qt, tokens(cand))) hits.push_back(cand);
      if (!hits.empty()) {
        if (hits.size() > 1)
          throw structure_error("least common multiple of traces '" + p +
                                "' and '" + q + "' is not unique");
        return hits.front();
      }
      std::vector<std::string> next;
      for (const std::string& cand : frontier)
        for (const std::string& s : gens_) {
          auto toks = tokens(cand);
          toks.push_back(s);
          std::string ext = canonical(toks);
          if (seen.insert(ext).second) next.push_back(ext);
        }
      frontier = std::move(next);
    }
    return std::nullopt;
  }

 private:
  RaagGroup group_;
  std::vector<std::string> gens_;
};

class TraceIdealSemilattice final : public Semilattice {
 public:
  explicit TraceIdealSemilattice(std::shared_ptr<const TraceMonoid> monoid)
      : monoid_(std::move(monoid)) {}

  std::string name() const override { return "trace right ideals"; }

  bool contains(const Elem& e) const override {
    return e.size() >= 2 && e.compare(0, 2, "m:") == 0 &&
           monoid_->valid(e.substr(2));
  }

  // pP * qP = (lcm of p and q)P, zero when no common multiple exists.
  Elem product(const Elem& a, const Elem& b) const override {
    if (!contains(a) || !contains(b))
      throw input_error("not a trace ideal: '" + (contains(a) ? b : a) + "'");
    auto l = monoid_->lcm(a.substr(2), b.substr(2));
    if (!l) return Elem{};
    return "m:" + *l;
  }

  const TraceMonoid& monoid() const { return *monoid_; }

 private:
  std::shared_ptr<const TraceMonoid> monoid_;
};

std::set<std::pair<std::string, std::string>> commuting_pairs(
    const RaamDesc& desc) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [s, t] : desc.edges) {
    if (s >= desc.generators.size() || t >= desc.generators.size())
      throw input_error("commutation edge references an unknown generator");
    if (s == t) throw input_error("a generator cannot commute with itself");
    out.insert({desc.generators[s], desc.generators[t]});
    out.insert({desc.generators[t], desc.generators[s]});
  }
  return out;
}

// All cliques of the commutation graph (the empty one included), as index
// sets, by recursive extension over increasing indices.
void cliques_rec(const std::vector<std::vector<bool>>& adj,
                 std::vector<std::size_t>& current, std::size_t from,
                 const std::function<void(const std::vector<std::size_t>&)>& emit) {
  emit(current);
  for (std::size_t v = from; v < adj.size(); ++v) {
    bool ok = true;
    for (std::size_t u : current)
      if (!adj[u][v]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(v);
    cliques_rec(adj, current, v + 1, emit);
    current.pop_back();
  }
}

std::vector<std::vector<bool>> commutation_adjacency(const RaamDesc& desc) {
  std::size_t n = desc.generators.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [s, t] : desc.edges) {
    if (s >= n || t >= n)
      throw input_error("commutation edge references an unknown generator");
    adj[s][t] = adj[t][s] = true;
  }
  return adj;
}

std::size_t max_clique_size(const RaamDesc& desc) {
  auto adj = commutation_adjacency(desc);
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  cliques_rec(adj, cur, 0,
              [&](const std::vector<std::size_t>& k) { best = std::max(best, k.size()); });
  return best;
}

}  // namespace

FamilySystem raam_system(const RaamDesc& desc, std::size_t max_len) {
  if (desc.generators.empty())
    throw input_error("the monoid needs at least one generator");
  auto monoid = std::make_shared<const TraceMonoid>(desc.generators,
                                                    commuting_pairs(desc));
  auto lat = std::make_shared<TraceIdealSemilattice>(monoid);
  auto group = std::make_shared<RaagGroup>(desc.generators,
                                           commuting_pairs(desc));

  FamilySystem sys;
  sys.lat = lat;
  sys.group = group;

  sys.action.group = group.get();
  sys.action.lat = lat.get();
  sys.action.step = [monoid, max_len](const Letter& l, const Elem& e) -> Elem {
    if (e.compare(0, 2, "m:") != 0)
      throw input_error("not a trace ideal: '" + e + "'");
    auto toks = monoid->tokens(e.substr(2));
    if (l.sign > 0) {
      if (toks.size() + 1 > max_len) return Elem{};
      toks.insert(toks.begin(), l.gen);
      return "m:" + monoid->canonical(toks);
    }
    for (std::size_t i : monoid->floor_positions(toks))
      if (toks[i] == l.gen) {
        toks.erase(toks.begin() + static_cast<long>(i));
        return "m:" + monoid->canonical(toks);
      }
    return Elem{};
  };
  sys.action.domain = [](const Letter& l) -> Elem {
    return l.sign > 0 ? Elem{} : "m:" + l.gen;
  };

  sys.covers.lat = lat.get();
  sys.covers.covers = [monoid](const Elem& e) {
    std::vector<Elem> cover;
    for (const std::string& s : monoid->gens()) {
      auto toks = monoid->tokens(e.substr(2));
      toks.push_back(s);
      cover.push_back("m:" + monoid->canonical(toks));
    }
    std::sort(cover.begin(), cover.end());
    return std::vector<std::vector<Elem>>{cover};
  };

  // Universe: canonical traces of length <= max_len.
  std::set<std::string> seen{""};
  std::vector<std::string> frontier{""};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<std::string> next;
    for (const std::string& p : frontier)
      for (const std::string& s : monoid->gens()) {
        auto toks = monoid->tokens(p);
        toks.push_back(s);
        std::string ext = monoid->canonical(toks);
        if (seen.insert(ext).second) next.push_back(ext);
      }
    frontier = std::move(next);
  }
  for (const std::string& p : seen) sys.universe.push_back("m:" + p);
  std::sort(sys.universe.begin(), sys.universe.end());
  sys.notes.push_back("traces of length <= " + std::to_string(max_len));
  return sys;
}

Int raam_euler_characteristic(const RaamDesc& desc) {
  auto adj = commutation_adjacency(desc);
  Int chi = 0;
  std::vector<std::size_t> cur;
  cliques_rec(adj, cur, 0, [&](const std::vector<std::size_t>& k) {
    chi += (k.size() % 2 == 0) ? 1 : -1;
  });
  return chi;
}

ChainComplex raam_complex(const RaamDesc& desc) {
  // The single orbit representative is the full ideal P; its level-1
  // expansion references the products of commuting generator subsets
  // (cliques), so the universe only needs the clique lengths.
  std::size_t len = std::max<std::size_t>(max_clique_size(desc), 1);
  FamilySystem sys = raam_system(desc, len);
  ResolutionLevels res =
      build_resolution(sys.covers, sys.action, sys.universe, 2);
  if (res.levels[0].size() != 1)
    throw structure_error("trace ideals fall into more than one orbit");
  return res.complex();
}

KResult raam_ktheory(const RaamDesc& desc) {
  ChainComplex c = raam_complex(desc);
  Int chi = raam_euler_characteristic(desc);
  if (c.ranks.size() == 2 && c.boundaries[0].at(0, 0) != chi)
    throw structure_error("resolution boundary disagrees with the clique "
                          "count: [" + to_string(c.boundaries[0].at(0, 0)) +
                          "] vs chi = " + to_string(chi));
  KResult r = assemble(homology_all(c));
  r.notes.push_back("boundary [chi] with chi = " + to_string(chi));

  // Warn when the monoid splits as a direct product (complement of the
  // commutation graph disconnected): the one-generator boundary model
  // collapses information in that case.
  std::size_t n = desc.generators.size();
  auto adj = commutation_adjacency(desc);
  if (n > 1) {
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && !adj[v][w] && !reached[w]) {
          reached[w] = true;
          stack.push_back(w);
        }
    }
    if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
      r.notes.push_back("warning: the monoid is a nontrivial direct product "
                        "(complement of the commutation graph is "
                        "disconnected); the boundary model is degenerate");
  }
  return r;
}

CheckReport raam_checks(const RaamDesc& desc, std::size_t max_len,
                        std::size_t depth) {
  FamilySystem sys = raam_system(desc, max_len);
  CheckReport out = check_condition_i(sys.covers, sys.universe);
  CheckReport ii = check_condition_ii(sys.covers, sys.universe);
  out.records.insert(out.records.end(), ii.records.begin(), ii.records.end());

  // Left multiplication raises trace length, so equivariance is tested on
  // elements that stay inside the truncation after depth-many letters.
  std::vector<Elem> inner;
  auto monoid = static_cast<const TraceIdealSemilattice*>(sys.lat.get());
  for (const Elem& e : sys.universe)
    if (monoid->monoid().tokens(e.substr(2)).size() + depth + 1 <= max_len)
      inner.push_back(e);
  CheckReport iii = check_condition_iii(sys.covers, sys.action, inner, depth);
  out.records.insert(out.records.end(), iii.records.begin(),
                     iii.records.end());

  CheckReport iv = check_condition_iv(sys.covers, sys.universe);
  out.records.insert(out.records.end(), iv.records.begin(), iv.records.end());
  return out;
}

}  // namespace zerok
