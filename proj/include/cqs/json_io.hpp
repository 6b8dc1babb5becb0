#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cqs/checks.hpp"
#include "cqs/exttor.hpp"

namespace cqs {

// Insertion-ordered JSON so every serialization below is byte-stable across
// runs: object keys appear in construction order, arrays in canonical sorted
// order, and all numbers are exact (64-bit integers when they fit, decimal
// strings beyond that, rationals as num/den pairs in lowest terms).
using Json = nlohmann::ordered_json;

Json json_int(const Int& x);
Json json_rat(const Rat& x);  // {"num": ..., "den": ...}, den > 0
Json json_vec(const LatticeVector& v);
Json json_rvec(const RationalVector& v);  // {"x": rat, "y": rat}

// Singularity datum, class representatives, their vertices and generators.
Json info_json(const Cqs& c);

// {"n", "q", "arrows": [{"source", "target", "label"}]}, arrows sorted by
// (target, source, label).
Json quiver_json(const Cqs& c, const SyzygyQuiver& qv);
std::string quiver_dot(const Cqs& c, const SyzygyQuiver& qv);

// {"dim", "degrees": [{"u", "mult", "labels"}]}, degrees sorted
// lexicographically.
Json support_json(const GradedSupport& s);

Json checks_json(const Cqs& c, Suite suite, const CheckOptions& opts,
                 const std::vector<CheckResult>& results);

// Canonical text form: two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace cqs
