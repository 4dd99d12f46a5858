#pragma once

// JSON (de)serialization for the CLI-facing value types, and the plain-text
// renderers.  JSON output is deterministic: fixed key order, two-space
// indentation, trailing newline.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "zerok/covers.hpp"
#include "zerok/families.hpp"
#include "zerok/homology.hpp"
#include "zerok/ktheory.hpp"

namespace zerok {

using Json = nlohmann::ordered_json;

// --- chain complexes --------------------------------------------------------
// {"ranks": [...], "boundaries": [[row-major ints], ...], "labels": [[...]]}
Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

// --- groups and K-results ---------------------------------------------------
// {"rank": r, "torsion": [d1, ...]}
Json abgroup_to_json(const AbGroup& g);
AbGroup abgroup_from_json(const Json& j);

// {"K0": ..., "K1": ..., "status": ..., "notes": [...]}; an unresolved K0 is
// {"extension": {"sub": ..., "quot": ...}}; undetermined groups are null.
Json kresult_to_json(const KResult& r);

// --- check reports ----------------------------------------------------------
// {"records": [{"condition": ..., "witness": [...], "verdict": ...,
//   "detail": ...}], "passed": bool}
Json report_to_json(const CheckReport& r);

// --- family descriptions ----------------------------------------------------
GraphDesc graph_desc_from_json(const Json& j);
TilingDesc tiling_desc_from_json(const Json& j);
RaamDesc raam_desc_from_json(const Json& j);
NqDesc nq_desc_from_json(const Json& j);

// --- text rendering ---------------------------------------------------------
// (report_to_text lives in covers.hpp next to the report type.)
std::string kresult_to_text(const KResult& r);
std::string homology_to_text(const std::vector<AbGroup>& hs);

// Serialize with the project-wide conventions (indent 2, newline).
std::string dump_json(const Json& j);

// Reads --input arguments: a leading '{' means inline JSON, anything else is
// a file path.  Parse errors are input_error.
Json load_json_argument(const std::string& arg);

}  // namespace zerok
