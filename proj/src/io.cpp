#include "zerok/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "zerok/errors.hpp"

namespace zerok {

namespace {

// Integers that fit in 64 bits travel as JSON numbers, anything larger as a
// decimal string; both forms are accepted on the way in.
Json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
  return to_string(x);
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw input_error(where + ": '" + j.get<std::string>() +
                        "' is not an integer");
    }
  }
  throw input_error(where + ": expected an integer");
}

const Json& require(const Json& j, const std::string& key,
                    const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw input_error(what + " needs a '" + key + "' field");
  return j.at(key);
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw input_error(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(j.get<std::int64_t>());
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array");
  std::vector<std::string> out;
  for (const Json& v : j) {
    if (!v.is_string()) throw input_error(where + ": expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Json complex_to_json(const ChainComplex& c) {
  Json j = Json::object();
  j["ranks"] = c.ranks;
  Json bds = Json::array();
  for (const IntMatrix& d : c.boundaries) {
    Json flat = Json::array();
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t k = 0; k < d.cols(); ++k) flat.push_back(int_to_json(d.at(i, k)));
    bds.push_back(std::move(flat));
  }
  j["boundaries"] = std::move(bds);
  j["labels"] = c.labels;
  return j;
}

ChainComplex complex_from_json(const Json& j) {
  ChainComplex c;
  const Json& ranks = require(j, "ranks", "a complex");
  if (!ranks.is_array() || ranks.empty())
    throw input_error("'ranks' must be a nonempty array");
  for (const Json& r : ranks) c.ranks.push_back(size_from_json(r, "ranks"));

  const Json& bds = require(j, "boundaries", "a complex");
  if (!bds.is_array() || bds.size() + 1 != c.ranks.size())
    throw input_error("'boundaries' must hold one matrix per adjacent pair "
                      "of ranks");
  for (std::size_t k = 0; k < bds.size(); ++k) {
    const Json& flat = bds[k];
    std::size_t rows = c.ranks[k], cols = c.ranks[k + 1];
    if (!flat.is_array() || flat.size() != rows * cols)
      throw input_error("boundary " + std::to_string(k + 1) + " must have " +
                        std::to_string(rows * cols) +
                        " row-major entries (" + std::to_string(rows) + "x" +
                        std::to_string(cols) + ")");
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t l = 0; l < cols; ++l)
        d.at(i, l) = int_from_json(flat[i * cols + l], "boundary entries");
    c.boundaries.push_back(std::move(d));
  }

  if (j.contains("labels") && !j.at("labels").empty()) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != c.ranks.size())
      throw input_error("'labels' must hold one list per degree");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto names = string_list(labels[k], "labels");
      if (names.size() != c.ranks[k])
        throw input_error("labels in degree " + std::to_string(k) +
                          " do not match the rank");
      c.labels.push_back(std::move(names));
    }
  }
  return c;
}

Json abgroup_to_json(const AbGroup& g) {
  Json j = Json::object();
  j["rank"] = g.rank;
  Json t = Json::array();
  for (const Int& d : g.torsion) t.push_back(int_to_json(d));
  j["torsion"] = std::move(t);
  return j;
}

AbGroup abgroup_from_json(const Json& j) {
  AbGroup g;
  g.rank = size_from_json(require(j, "rank", "an abelian group"), "rank");
  const Json& t = require(j, "torsion", "an abelian group");
  if (!t.is_array()) throw input_error("'torsion' must be an array");
  std::vector<Int> orders;
  for (const Json& d : t) orders.push_back(int_from_json(d, "torsion"));
  AbGroup normalized = make_ab_group(g.rank, orders);
  return normalized;
}

namespace {

Json kgroup_to_json(const std::optional<KGroup>& k) {
  if (!k) return nullptr;
  if (!k->extension) return abgroup_to_json(k->value);
  Json j = Json::object();
  Json e = Json::object();
  e["sub"] = abgroup_to_json(k->sub);
  e["quot"] = abgroup_to_json(k->quot);
  j["extension"] = std::move(e);
  return j;
}

}  // namespace

Json kresult_to_json(const KResult& r) {
  Json j = Json::object();
  j["K0"] = kgroup_to_json(r.k0);
  j["K1"] = kgroup_to_json(r.k1);
  j["status"] = r.status;
  j["notes"] = r.notes;
  return j;
}

Json report_to_json(const CheckReport& r) {
  Json j = Json::object();
  Json records = Json::array();
  for (const CheckRecord& rec : r.records) {
    Json e = Json::object();
    e["condition"] = rec.condition;
    e["witness"] = rec.witness;
    e["verdict"] = to_string(rec.verdict);
    e["detail"] = rec.detail;
    records.push_back(std::move(e));
  }
  j["records"] = std::move(records);
  j["passed"] = !r.any_failed();
  return j;
}

GraphDesc graph_desc_from_json(const Json& j) {
  GraphDesc desc;
  desc.vertices = string_list(require(j, "vertices", "a graph"), "vertices");
  const Json& edges = require(j, "edges", "a graph");
  if (!edges.is_array()) throw input_error("'edges' must be an array");
  for (const Json& e : edges) {
    const Json& src = require(e, "src", "an edge");
    const Json& dst = require(e, "dst", "an edge");
    if (!src.is_string() || !dst.is_string())
      throw input_error("edge endpoints must be vertex names");
    desc.edges.push_back({src.get<std::string>(), dst.get<std::string>()});
  }
  return desc;
}

TilingDesc tiling_desc_from_json(const Json& j) {
  TilingDesc desc;
  if (j.contains("alphabet"))
    desc.alphabet = string_list(j.at("alphabet"), "alphabet");
  if (j.contains("period")) {
    if (!j.at("period").is_string())
      throw input_error("'period' must be a string");
    desc.period = j.at("period").get<std::string>();
  }
  if (j.contains("words")) desc.words = string_list(j.at("words"), "words");
  if (desc.period.empty() && desc.words.empty())
    throw input_error("a tiling needs a 'period' or a 'words' list");
  return desc;
}

RaamDesc raam_desc_from_json(const Json& j) {
  RaamDesc desc;
  desc.generators =
      string_list(require(j, "generators", "a monoid"), "generators");
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) throw input_error("'edges' must be an array");
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 2)
        throw input_error("each commutation edge is a pair of indices");
      desc.edges.emplace_back(size_from_json(e[0], "edges"),
                              size_from_json(e[1], "edges"));
    }
  }
  return desc;
}

NqDesc nq_desc_from_json(const Json& j) {
  NqDesc desc;
  const Json& primes = require(j, "primes", "a progression family");
  if (!primes.is_array() || primes.empty())
    throw input_error("'primes' must be a nonempty array");
  for (const Json& p : primes) desc.primes.push_back(int_from_json(p, "primes"));
  return desc;
}

std::string kresult_to_text(const KResult& r) {
  std::ostringstream os;
  os << "K0 = " << (r.k0 ? r.k0->to_text() : "undetermined") << "\n";
  os << "K1 = " << (r.k1 ? r.k1->to_text() : "undetermined") << "\n";
  os << "status: " << r.status << "\n";
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string homology_to_text(const std::vector<AbGroup>& hs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < hs.size(); ++k)
    os << "H" << k << " = " << hs[k].to_text() << "\n";
  return os.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_argument(const std::string& arg) {
  std::string text;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw input_error("cannot open input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw input_error("invalid JSON input: " + std::string(e.what()));
  }
}

}  // namespace zerok
