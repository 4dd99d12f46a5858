#include "zerok/families.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zerok/errors.hpp"

namespace zerok {

namespace {

// A finite path read from its range vertex: edges[0] is the edge at the
// range, edges.back() the edge at the source.  Length-0 paths carry the
// vertex explicitly.
struct Path {
  std::size_t len = 0;
  std::string vertex;              // only for len == 0
  std::vector<std::size_t> edges;  // edge indices, range end first
};

class GraphSemilattice final : public Semilattice {
 public:
  explicit GraphSemilattice(const GraphDesc& desc) : desc_(desc) {
    if (desc.vertices.empty())
      throw input_error("graph needs at least one vertex");
    for (const std::string& v : desc.vertices) {
      if (v.empty()) throw input_error("empty vertex name");
      if (v.find_first_of(".:#'") != std::string::npos)
        throw input_error("vertex name '" + v +
                          "' may not contain '.', ':', '#' or '''");
      if (!vertex_index_.emplace(v, vertex_index_.size()).second)
        throw input_error("duplicate vertex '" + v + "'");
    }
    for (const GraphEdge& e : desc.edges) {
      if (!vertex_index_.count(e.src) || !vertex_index_.count(e.dst))
        throw input_error("edge " + e.src + " -> " + e.dst +
                          " references an unknown vertex");
    }
  }

  std::string name() const override { return "graph paths"; }

  std::optional<Path> parse(const Elem& e) const {
    if (e.size() < 4 || e.compare(0, 2, "p:") != 0) return std::nullopt;
    auto colon = e.find(':', 2);
    if (colon == std::string::npos) return std::nullopt;
    Path p;
    try {
      std::size_t pos = 0;
      p.len = std::stoul(e.substr(2, colon - 2), &pos);
      if (pos != colon - 2) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    std::string rest = e.substr(colon + 1);
    if (p.len == 0) {
      if (!vertex_index_.count(rest)) return std::nullopt;
      p.vertex = rest;
      return p;
    }
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto dot = rest.find('.', start);
      std::string tok = rest.substr(
          start, dot == std::string::npos ? std::string::npos : dot - start);
      if (tok.size() < 2 || tok[0] != 'e') return std::nullopt;
      try {
        std::size_t pos = 0;
        std::size_t idx = std::stoul(tok.substr(1), &pos);
        if (pos != tok.size() - 1 || idx >= desc_.edges.size())
          return std::nullopt;
        p.edges.push_back(idx);
      } catch (const std::exception&) {
        return std::nullopt;
      }
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    if (p.edges.size() != p.len) return std::nullopt;
    for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
      if (desc_.edges[p.edges[i]].src != desc_.edges[p.edges[i + 1]].dst)
        return std::nullopt;
    return p;
  }

  static Elem serialize(const Path& p) {
    std::ostringstream os;
    os << "p:" << p.len << ":";
    if (p.len == 0) {
      os << p.vertex;
    } else {
      for (std::size_t i = 0; i < p.edges.size(); ++i)
        os << (i ? "." : "") << "e" << p.edges[i];
    }
    return os.str();
  }

  std::string range(const Path& p) const {
    return p.len == 0 ? p.vertex : desc_.edges[p.edges.front()].dst;
  }
  std::string source(const Path& p) const {
    return p.len == 0 ? p.vertex : desc_.edges[p.edges.back()].src;
  }

  bool contains(const Elem& e) const override {
    return parse(e).has_value();
  }

  Elem product(const Elem& a, const Elem& b) const override {
    auto pa = parse(a), pb = parse(b);
    if (!pa || !pb)
      throw input_error("not a path element: '" + (pa ? b : a) + "'");
    if (range(*pa) != range(*pb)) return Elem{};
    const Path& shorter = pa->len <= pb->len ? *pa : *pb;
    const Path& longer = pa->len <= pb->len ? *pb : *pa;
    for (std::size_t i = 0; i < shorter.len; ++i)
      if (shorter.edges[i] != longer.edges[i]) return Elem{};
    return serialize(longer);
  }

  const GraphDesc& desc() const { return desc_; }

 private:
  GraphDesc desc_;
  std::map<std::string, std::size_t> vertex_index_;
};

// Edges pointing into each vertex (by dst), i.e. the one-step extensions at
// elements with that source vertex; index order, hence canonical.
std::map<std::string, std::vector<std::size_t>> edges_by_dst(
    const GraphDesc& desc) {
  std::map<std::string, std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < desc.edges.size(); ++k)
    out[desc.edges[k].dst].push_back(k);
  return out;
}

std::vector<std::string> regular_vertices(const GraphDesc& desc) {
  auto into = edges_by_dst(desc);
  std::vector<std::string> reg;
  for (const std::string& v : desc.vertices)
    if (into.count(v)) reg.push_back(v);
  std::sort(reg.begin(), reg.end());
  return reg;
}

std::vector<std::string> singular_vertices(const GraphDesc& desc) {
  auto into = edges_by_dst(desc);
  std::vector<std::string> sing;
  for (const std::string& v : desc.vertices)
    if (!into.count(v)) sing.push_back(v);
  std::sort(sing.begin(), sing.end());
  return sing;
}

}  // namespace

FamilySystem graph_system(const GraphDesc& desc, std::size_t max_len) {
  auto lat = std::make_shared<GraphSemilattice>(desc);
  std::vector<std::string> gen_names;
  for (std::size_t k = 0; k < desc.edges.size(); ++k)
    gen_names.push_back("e" + std::to_string(k));
  auto group = std::make_shared<FreeGroup>(gen_names);

  FamilySystem sys;
  sys.lat = lat;
  sys.group = group;

  sys.action.group = group.get();
  sys.action.lat = lat.get();
  sys.action.step = [lat, max_len](const Letter& l, const Elem& e) -> Elem {
    auto p = lat->parse(e);
    if (!p) throw input_error("not a path element: '" + e + "'");
    std::size_t k = std::stoul(l.gen.substr(1));
    const GraphEdge& edge = lat->desc().edges[k];
    if (l.sign > 0) {
      if (lat->range(*p) != edge.src) return Elem{};
      if (p->len + 1 > max_len) return Elem{};
      Path q;
      q.len = p->len + 1;
      q.edges.push_back(k);
      q.edges.insert(q.edges.end(), p->edges.begin(), p->edges.end());
      return GraphSemilattice::serialize(q);
    }
    if (p->len == 0 || p->edges.front() != k) return Elem{};
    Path q;
    q.len = p->len - 1;
    q.edges.assign(p->edges.begin() + 1, p->edges.end());
    if (q.len == 0) q.vertex = edge.src;
    return GraphSemilattice::serialize(q);
  };
  sys.action.domain = [lat](const Letter& l) -> Elem {
    std::size_t k = std::stoul(l.gen.substr(1));
    if (l.sign > 0) {
      Path p;
      p.vertex = lat->desc().edges[k].src;
      return GraphSemilattice::serialize(p);
    }
    Path p;
    p.len = 1;
    p.edges.push_back(k);
    return GraphSemilattice::serialize(p);
  };

  auto into = std::make_shared<std::map<std::string, std::vector<std::size_t>>>(
      edges_by_dst(desc));
  sys.covers.lat = lat.get();
  sys.covers.covers = [lat, into](const Elem& e) {
    std::vector<std::vector<Elem>> out;
    auto p = lat->parse(e);
    if (!p) throw input_error("not a path element: '" + e + "'");
    auto it = into->find(lat->source(*p));
    if (it == into->end()) return out;
    std::vector<Elem> cover;
    for (std::size_t k : it->second) {
      Path q = *p;
      q.len = p->len + 1;
      q.edges.push_back(k);
      q.vertex.clear();
      cover.push_back(GraphSemilattice::serialize(q));
    }
    out.push_back(std::move(cover));
    return out;
  };

  // Universe: all paths of length <= max_len, breadth first by length.
  std::vector<Path> frontier;
  for (const std::string& v : desc.vertices) {
    Path p;
    p.vertex = v;
    frontier.push_back(p);
    sys.universe.push_back(GraphSemilattice::serialize(p));
  }
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      auto it = into->find(lat->source(p));
      if (it == into->end()) continue;
      for (std::size_t k : it->second) {
        Path q = p;
        q.len = p.len + 1;
        q.edges.push_back(k);
        q.vertex.clear();
        next.push_back(q);
        sys.universe.push_back(GraphSemilattice::serialize(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(sys.universe.begin(), sys.universe.end());
  sys.notes.push_back("paths truncated to length <= " +
                      std::to_string(max_len));
  return sys;
}

ChainComplex graph_complex(const GraphDesc& desc) {
  FamilySystem sys = graph_system(desc, 1);
  ResolutionLevels res =
      build_resolution(sys.covers, sys.action, sys.universe, 2);
  ChainComplex c = res.complex();

  // The resolution orders C_0 rows by serialization (all vertices mixed);
  // reorder to regular-then-singular, each part lexicographic, and relabel
  // by plain vertex names.
  std::vector<std::string> reg = regular_vertices(desc);
  std::vector<std::string> sing = singular_vertices(desc);
  std::vector<std::string> want = reg;
  want.insert(want.end(), sing.begin(), sing.end());

  std::map<std::string, std::size_t> old_row;
  for (std::size_t i = 0; i < c.labels[0].size(); ++i) {
    const std::string& lab = c.labels[0][i];  // "p:0:<v>"
    old_row[lab.substr(4)] = i;
  }
  if (old_row.size() != want.size())
    throw structure_error("resolution orbit representatives are not the vertices");

  if (!c.boundaries.empty()) {
    const IntMatrix& d = c.boundaries[0];
    IntMatrix perm(want.size(), d.cols());
    for (std::size_t i = 0; i < want.size(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        perm.at(i, j) = d.at(old_row.at(want[i]), j);
    c.boundaries[0] = std::move(perm);
  }
  c.labels[0] = want;
  if (c.labels.size() > 1)
    for (std::string& lab : c.labels[1]) lab = lab.substr(4);  // "<v>#1"
  c.validate();
  return c;
}

IntMatrix graph_boundary_closed_form(const GraphDesc& desc) {
  // A(v, w) = #{edges with dst = v, src = w}; rows regular-then-singular,
  // columns regular; entry(w, v) = delta_{wv} - A(v, w).
  std::vector<std::string> reg = regular_vertices(desc);
  std::vector<std::string> rows = reg;
  {
    std::vector<std::string> sing = singular_vertices(desc);
    rows.insert(rows.end(), sing.begin(), sing.end());
  }
  std::map<std::pair<std::string, std::string>, Int> a;
  for (const GraphEdge& e : desc.edges) a[{e.dst, e.src}] += 1;

  IntMatrix d(rows.size(), reg.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < reg.size(); ++j) {
      Int v = rows[i] == reg[j] ? 1 : 0;
      auto it = a.find({reg[j], rows[i]});
      if (it != a.end()) v -= it->second;
      d.at(i, j) = v;
    }
  return d;
}

KResult graph_ktheory(const GraphDesc& desc) {
  ChainComplex c = graph_complex(desc);
  KResult r = assemble(homology_all(c));
  FamilySystem sys = graph_system(desc, 3);
  FreeActionReport fr = free_action_check(sys.action, sys.universe, 3);
  if (fr.free_up_to_depth()) {
    r.notes.push_back("no fixed points found for group elements of word length <= " +
                      std::to_string(fr.depth) + " on paths of length <= 3");
  } else {
    r.notes.push_back("fixed point found: theta_{" + fr.violations[0].g +
                      "} fixes " + fr.violations[0].e);
  }
  return r;
}

CheckReport graph_checks(const GraphDesc& desc, std::size_t max_len,
                         std::size_t depth) {
  FamilySystem sys = graph_system(desc, max_len);
  CheckReport out = check_condition_i(sys.covers, sys.universe);
  CheckReport ii = check_condition_ii(sys.covers, sys.universe);
  out.records.insert(out.records.end(), ii.records.begin(), ii.records.end());

  // For equivariance, restrict to elements whose covers stay strictly inside
  // the action ball after depth-many letters.
  std::vector<Elem> inner;
  auto* lat = static_cast<const GraphSemilattice*>(sys.lat.get());
  for (const Elem& e : sys.universe) {
    auto p = lat->parse(e);
    if (p->len + depth + 1 <= max_len) inner.push_back(e);
  }
  CheckReport iii = check_condition_iii(sys.covers, sys.action, inner, depth);
  out.records.insert(out.records.end(), iii.records.begin(),
                     iii.records.end());

  CheckReport iv = check_condition_iv(sys.covers, sys.universe);
  out.records.insert(out.records.end(), iv.records.begin(), iv.records.end());
  return out;
}

}  // namespace zerok
