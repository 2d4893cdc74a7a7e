#pragma once

#include <string>

#include "geodkit/graph.hpp"
#include "geodkit/verdict.hpp"
#include "json.hpp"

namespace geodkit {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings.
Json to_json(const BigInt& x);
Json to_json(const Witness& w);

/// {n, m, diameter, geodetic, antipodal, witness_geodetic?, witness_antipodal?}
Json check_document(const Graph& g, const Verdict& geodetic, const Verdict& antipodal);

/// Blocks, cut vertices, class memberships, antipode counts and the
/// transversality report at `root`. Unit weights only.
Json analyze_document(const Graph& g, Vertex root);

/// One "key  value" row per top-level member; nested values are printed as
/// compact JSON.
std::string render_text(const Json& doc);

}  // namespace geodkit
