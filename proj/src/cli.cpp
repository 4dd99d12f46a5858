#include "zerok/cli.hpp"

#include <CLI11.hpp>

#include <cstddef>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zerok/errors.hpp"
#include "zerok/families.hpp"
#include "zerok/homology.hpp"
#include "zerok/io.hpp"
#include "zerok/ktheory.hpp"

namespace zerok {

namespace {

struct CommonOpts {
  std::string input;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool input_required) {
  auto* in = cmd->add_option("--input", opts.input,
                             "family description: a file path or inline JSON");
  if (input_required) in->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void emit(const CommonOpts& opts, const Json& json, const std::string& text) {
  if (opts.format == "json")
    std::cout << dump_json(json);
  else
    std::cout << text;
}

std::vector<std::size_t> parse_depths(const std::string& flag,
                                      const Json& input) {
  std::vector<std::size_t> depths;
  if (!flag.empty()) {
    std::istringstream is(flag);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        std::size_t pos = 0;
        depths.push_back(std::stoul(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw input_error("invalid depth '" + tok + "'");
      }
    }
  } else if (input.is_object() && input.contains("depths")) {
    for (const Json& d : input.at("depths")) {
      if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
        throw input_error("depths must be nonnegative integers");
      depths.push_back(static_cast<std::size_t>(d.get<std::int64_t>()));
    }
  } else {
    depths = {3, 4, 5};
  }
  return depths;
}

int emit_kresult(const CommonOpts& opts, const KResult& r) {
  emit(opts, kresult_to_json(r), kresult_to_text(r));
  return 0;
}

Json tiling_to_json(const TilingKTheory& t) {
  Json j = Json::object();
  Json depths = Json::array();
  for (const TilingDepthResult& d : t.per_depth) {
    Json e = Json::object();
    e["depth"] = d.depth;
    e["result"] = kresult_to_json(d.k);
    depths.push_back(std::move(e));
  }
  j["depths"] = std::move(depths);
  j["stabilized"] = t.stabilized;
  j["notes"] = t.notes;
  return j;
}

std::string tiling_to_text(const TilingKTheory& t) {
  std::ostringstream os;
  for (const TilingDepthResult& d : t.per_depth) {
    os << "depth " << d.depth << ":\n";
    std::istringstream lines(kresult_to_text(d.k));
    std::string line;
    while (std::getline(lines, line)) os << "  " << line << "\n";
  }
  os << "stabilized: " << (t.stabilized ? "yes" : "no") << "\n";
  for (const std::string& n : t.notes) os << "note: " << n << "\n";
  return os.str();
}

int run_parsed(const std::string& sub, const CommonOpts& opts, bool check,
               const std::string& depths_flag, const std::string& primes_flag,
               std::size_t max_len, std::size_t depth) {
  if (sub == "graph") {
    GraphDesc desc = graph_desc_from_json(load_json_argument(opts.input));
    if (check) {
      CheckReport rep = graph_checks(desc, 4, 2);
      if (rep.any_failed()) {
        std::cerr << "cover-system conditions failed:\n" << report_to_text(rep);
        return 2;
      }
    }
    return emit_kresult(opts, graph_ktheory(desc));
  }

  if (sub == "tiling") {
    Json input = load_json_argument(opts.input);
    TilingDesc desc = tiling_desc_from_json(input);
    TilingKTheory t =
        tiling_ktheory(desc, parse_depths(depths_flag, input), check);
    emit(opts, tiling_to_json(t), tiling_to_text(t));
    return 0;
  }

  if (sub == "raam") {
    RaamDesc desc = raam_desc_from_json(load_json_argument(opts.input));
    if (check) {
      CheckReport rep = raam_checks(desc, 3, 1);
      if (rep.any_failed()) {
        std::cerr << "cover-system conditions failed:\n" << report_to_text(rep);
        return 2;
      }
    }
    return emit_kresult(opts, raam_ktheory(desc));
  }

  if (sub == "nq") {
    NqDesc desc;
    if (!primes_flag.empty()) {
      std::istringstream is(primes_flag);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        try {
          desc.primes.push_back(Int(tok));
        } catch (const std::exception&) {
          throw input_error("invalid prime '" + tok + "'");
        }
      }
    } else if (!opts.input.empty()) {
      desc = nq_desc_from_json(load_json_argument(opts.input));
    } else {
      throw input_error("nq needs --primes or --input");
    }
    return emit_kresult(opts, nq_ktheory(desc, check));
  }

  if (sub == "complex") {
    ChainComplex c = complex_from_json(load_json_argument(opts.input));
    std::vector<AbGroup> hs = homology_all(c);
    KResult r = assemble(hs);
    Json j = complex_to_json(c);
    Json hj = Json::array();
    for (const AbGroup& h : hs) hj.push_back(abgroup_to_json(h));
    j["homology"] = std::move(hj);
    Json k = kresult_to_json(r);
    for (auto& [key, value] : k.items()) j[key] = value;
    emit(opts, j, homology_to_text(hs) + kresult_to_text(r));
    return 0;
  }

  if (sub == "check-covers") {
    Json input = load_json_argument(opts.input);
    std::string family =
        input.is_object() && input.contains("family") && input.at("family").is_string()
            ? input.at("family").get<std::string>()
            : "";
    CheckReport rep;
    if (family == "graph")
      rep = graph_checks(graph_desc_from_json(input), max_len, depth);
    else if (family == "tiling")
      rep = tiling_checks(tiling_desc_from_json(input), max_len, depth);
    else if (family == "raam")
      rep = raam_checks(raam_desc_from_json(input), max_len, depth);
    else if (family == "nq")
      rep = nq_checks(nq_desc_from_json(input), depth);
    else
      throw input_error("check-covers needs a 'family' field of "
                        "graph|tiling|raam|nq");
    emit(opts, report_to_json(rep), report_to_text(rep));
    if (rep.any_failed()) {
      std::cerr << "cover-system conditions failed\n";
      return 2;
    }
    return 0;
  }

  throw input_error("unknown subcommand '" + sub + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"K-groups of ample groupoids from semilattice cover systems"};
  app.require_subcommand(1);

  CommonOpts graph_opts, tiling_opts, raam_opts, nq_opts, complex_opts,
      cover_opts;
  bool graph_check = false, tiling_check = true, raam_check = false,
       nq_check = true;
  std::string depths_flag, primes_flag;
  std::size_t cover_max_len = 3, cover_depth = 2;

  CLI::App* graph = app.add_subcommand(
      "graph", "K-theory of the path space of a finite graph");
  add_common(graph, graph_opts, true);
  graph->add_flag("--check,!--no-check", graph_check,
                  "verify the cover conditions first (default off)");

  CLI::App* tiling = app.add_subcommand(
      "tiling", "K-theory of a one-dimensional tiling across depths");
  add_common(tiling, tiling_opts, true);
  tiling->add_option("--depths", depths_flag,
                     "comma-separated truncation depths (default 3,4,5)");
  tiling->add_flag("--check,!--no-check", tiling_check,
                   "verify the cover conditions first (default on)");

  CLI::App* raam = app.add_subcommand(
      "raam", "K-theory of a right-angled Artin monoid boundary");
  add_common(raam, raam_opts, true);
  raam->add_flag("--check,!--no-check", raam_check,
                 "verify the cover conditions first (default off)");

  CLI::App* nq = app.add_subcommand(
      "nq", "K-theory of arithmetic progressions under x+1 and px");
  add_common(nq, nq_opts, false);
  nq->add_option("--primes", primes_flag, "comma-separated primes");
  nq->add_flag("--check,!--no-check", nq_check,
               "verify the cover conditions first (default on)");

  CLI::App* complex_cmd = app.add_subcommand(
      "complex", "homology and K-groups of a raw chain complex");
  add_common(complex_cmd, complex_opts, true);

  CLI::App* covers = app.add_subcommand(
      "check-covers", "run the four cover-condition checkers on a family");
  add_common(covers, cover_opts, true);
  covers->add_option("--max-len", cover_max_len,
                     "universe truncation length")
      ->capture_default_str();
  covers->add_option("--depth", cover_depth,
                     "group word length for the equivariance check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (graph->parsed())
      return run_parsed("graph", graph_opts, graph_check, "", "", 0, 0);
    if (tiling->parsed())
      return run_parsed("tiling", tiling_opts, tiling_check, depths_flag, "",
                        0, 0);
    if (raam->parsed())
      return run_parsed("raam", raam_opts, raam_check, "", "", 0, 0);
    if (nq->parsed()) return run_parsed("nq", nq_opts, nq_check, "", primes_flag, 0, 0);
    if (complex_cmd->parsed())
      return run_parsed("complex", complex_opts, false, "", "", 0, 0);
    if (covers->parsed())
      return run_parsed("check-covers", cover_opts, false, "", "",
                        cover_max_len, cover_depth);
    std::cerr << "no subcommand given\n";
    return 1;
  } catch (const refusal_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const structure_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zerok
