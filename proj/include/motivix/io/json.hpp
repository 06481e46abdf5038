#pragma once

#include <json.hpp>

#include "motivix/cmlat/model.hpp"
#include "motivix/decomp/decide.hpp"
#include "motivix/fermat/curve.hpp"
#include "motivix/motcalc/motive.hpp"

#include <string>

namespace motivix::io {

// Keys keep insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

// Every exact number goes out as [num, den]; parts beyond 64 bits become
// decimal strings. On input a rational may be an integer, [num, den] or "n/d".
Json rat_json(const exact::Rat& r);
Json int_json(const exact::Int& z);
exact::Rat rat_from_json(const Json& j);

Json quad_json(const exact::QuadInt& z);  // {"re": [n,d], "im": [n,d]}
Json matrix_json(const exact::QuadMatrix& m);

// Model files:
// { "d": 1, "g": 2, "mode": "lattice" | "axiomatic", "order": "gaussian" | "maximal",
//   "glue": [[coordinate, ...], ...], "exponents": [6, 6, ...] }
// A glue coordinate is a rational (its real part) or {"re": r, "im": r}.
// InvalidInput on malformed files.
cmlat::ModelSpec model_spec_from_json(const Json& j);
cmlat::AbelianModel load_model(const std::string& path);
Json model_json(const cmlat::AbelianModel& m);

Json read_json_file(const std::string& path);

enum class TraceLevel { None, Steps, Full };
Json candidate_json(const decomp::Candidate& c);
Json verdict_json(const decomp::Verdict& v, TraceLevel level);

Json dims_json(const motcalc::DimVector& v);

// Morphism files: { "source": "x^6 + y^6 + 1", "target": "v^2 - u^3 + 1",
//   "u": "-x^2", "v": "y^3", "form": {"P": "1/v", "Q": "0"} }. The target is
// written in u, v; the form defaults to du/v.
fermat::CurveMorphism morphism_from_json(const Json& j);

// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace motivix::io
