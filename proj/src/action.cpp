#include "zerok/action.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "zerok/errors.hpp"

namespace zerok {

Elem PartialAction::apply_word(const Word& w, Elem e) const {
  if (is_zero(e)) throw input_error("partial action applied to zero");
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    e = step(*it, e);
    if (is_zero(e)) return {};
  }
  return e;
}

Elem PartialAction::apply(const std::string& g, const Elem& e) const {
  return apply_word(group->word(g), e);
}

Elem PartialAction::apply_restricted(const Word& w, Elem e) const {
  if (is_zero(e)) throw input_error("partial action applied to zero");
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (domain) {
      Elem dom = domain(*it);
      if (!is_zero(dom)) {
        e = lat->product(e, dom);
        if (is_zero(e)) return {};
      }
    }
    e = step(*it, e);
    if (is_zero(e)) return {};  // outside the domain (or truncated away)
  }
  return e;
}

namespace {

std::size_t word_length(const Group& g, const std::string& elem) {
  return g.word(elem).size();
}

// (word length, serialization, element): the minimization key for canonical
// representatives.
using EnvKey = std::tuple<std::size_t, std::string, Elem>;

EnvKey key_of(const Group& g, const EnvElem& x) {
  return {word_length(g, x.g), x.g, x.e};
}

}  // namespace

EnvElem env_canonical(const PartialAction& act, const EnvElem& x) {
  if (is_zero(x.e)) throw input_error("enveloping element with zero part");
  if (!act.lat->contains(x.e))
    throw structure_error("enveloping element over a non-member '" + x.e + "'");
  const Group& G = *act.group;
  EnvElem start{G.elem(G.word(x.g)), x.e};
  const std::size_t bound = word_length(G, start.g);

  std::set<EnvElem> visited{start};
  std::deque<EnvElem> queue{start};
  EnvElem best = start;
  EnvKey best_key = key_of(G, best);

  std::vector<Letter> letters;
  for (const auto& gen : G.generators()) {
    letters.push_back({gen, 1});
    letters.push_back({gen, -1});
  }

  while (!queue.empty()) {
    EnvElem cur = queue.front();
    queue.pop_front();
    for (const auto& l : letters) {
      Elem e2 = act.step(l, cur.e);
      if (is_zero(e2)) continue;
      // [h, e] = [h l^{-1}, theta_l(e)]
      std::string h2 = G.mul(cur.g, G.elem({l.inverse()}));
      if (word_length(G, h2) > bound) continue;
      EnvElem next{std::move(h2), std::move(e2)};
      if (!visited.insert(next).second) continue;
      EnvKey k = key_of(G, next);
      if (k < best_key) {
        best_key = k;
        best = next;
      }
      queue.push_back(next);
    }
  }
  return best;
}

std::optional<EnvElem> env_product(const PartialAction& act, const EnvElem& x,
                                   const EnvElem& y) {
  EnvElem cx = env_canonical(act, x);
  EnvElem cy = env_canonical(act, y);
  const Group& G = *act.group;
  // [g, d] * [h, e] = [g, d * theta_{g^{-1} h}(e * dom)]
  std::string k = G.mul(G.inv(cx.g), cy.g);
  Elem moved = act.apply_restricted(G.word(k), cy.e);
  if (is_zero(moved)) return std::nullopt;
  Elem p = act.lat->product(cx.e, moved);
  if (is_zero(p)) return std::nullopt;
  return env_canonical(act, {cx.g, p});
}

EnvElem dilate(const PartialAction& act, const std::string& g,
               const EnvElem& x) {
  EnvElem cx = env_canonical(act, x);
  return env_canonical(act, {act.group->mul(g, cx.g), cx.e});
}

Elem Orbits::representative(const Elem& e) const {
  auto it = index.find(e);
  if (it == index.end())
    throw input_error("element '" + e + "' is not in the decomposed universe");
  return classes[it->second].front();
}

Orbits orbits(const PartialAction& act, const std::vector<Elem>& universe) {
  std::vector<Elem> sorted = universe;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::map<Elem, std::size_t> pos;
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = i;

  std::vector<std::size_t> parent(sorted.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::vector<Letter> letters;
  for (const auto& gen : act.group->generators()) {
    letters.push_back({gen, 1});
    letters.push_back({gen, -1});
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (const auto& l : letters) {
      Elem f = act.step(l, sorted[i]);
      if (is_zero(f)) continue;
      auto it = pos.find(f);
      if (it == pos.end())
        throw structure_error("universe is not closed: letter '" + l.gen +
                              (l.sign < 0 ? "'" : "") + "' carries '" +
                              sorted[i] + "' to '" + f + "' outside it");
      unite(i, it->second);
    }
  }

  Orbits out;
  std::map<std::size_t, std::size_t> root_class;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::size_t r = find(i);
    auto [it, inserted] = root_class.try_emplace(r, out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(sorted[i]);
    out.index[sorted[i]] = it->second;
  }
  return out;
}

FreeActionReport free_action_check(const PartialAction& act,
                                   const std::vector<Elem>& universe,
                                   std::size_t depth) {
  const Group& G = *act.group;
  FreeActionReport report;
  report.depth = depth;
  report.elements_checked = universe.size();

  std::vector<Letter> letters;
  for (const auto& gen : G.generators()) {
    letters.push_back({gen, 1});
    letters.push_back({gen, -1});
  }

  // Breadth-first enumeration of group elements by word length, deduplicated
  // by canonical form.
  std::set<std::string> seen{G.identity()};
  std::vector<std::string> frontier{G.identity()};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto& g : frontier) {
      for (const auto& l : letters) {
        std::string h = G.mul(g, G.elem({l}));
        if (!seen.insert(h).second) continue;
        next.push_back(h);
        ++report.group_elements_checked;
        for (const auto& e : universe) {
          if (act.apply(h, e) == e) report.violations.push_back({h, e});
        }
      }
    }
    frontier = std::move(next);
  }
  return report;
}

}  // namespace zerok
