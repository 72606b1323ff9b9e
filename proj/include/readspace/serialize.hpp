#pragma once

#include <json.hpp>

#include "readspace/interval.hpp"
#include "readspace/vectors.hpp"

namespace readspace {

// Reports must be byte-identical across runs, so every emitter uses
// ordered_json with a fixed insertion order.
using Json = nlohmann::ordered_json;

// Rationals serialize as "p/q" decimal strings ("p" when q = 1).
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

// ScaledRational: {"m": "p/q", "e2": int}.
Json scaled_json(const ScaledRational& s);
ScaledRational scaled_from_json(const Json& j);

// Interval: {"lo": scaled, "hi": scaled}.
Json interval_json(const Interval& a);
Interval interval_from_json(const Json& j);

// Vectors: {"index": "p/q"} maps, keys in ascending index order.
Json sparse_json(const SparseVec& v);
SparseVec sparse_from_json(const Json& j);

// TailVec: head map plus {"tail": "p/q", "horizon": int}.
Json tailvec_json(const TailVec& v);
TailVec tailvec_from_json(const Json& j);

} // namespace readspace
