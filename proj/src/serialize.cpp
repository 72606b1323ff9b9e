#include "readspace/serialize.hpp"

namespace readspace {

namespace {

std::int64_t parse_index(const std::string& key) {
    std::size_t pos = 0;
    long long i = 0;
    try {
        i = std::stoll(key, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad vector index key: '" + key + "'");
    }
    if (pos != key.size() || i < 1) throw ConfigError("bad vector index key: '" + key + "'");
    return static_cast<std::int64_t>(i);
}

} // namespace

Json rational_json(const Rational& q) {
    return rational_str(q);
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ConfigError("rational must be a \"p/q\" string, got: " + j.dump());
    return parse_rational(j.get<std::string>());
}

Json scaled_json(const ScaledRational& s) {
    Json j;
    j["m"] = rational_json(s.mantissa());
    j["e2"] = s.exp2();
    return j;
}

ScaledRational scaled_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("e2"))
        throw ConfigError("ScaledRational must be {\"m\": \"p/q\", \"e2\": int}");
    return ScaledRational(rational_from_json(j.at("m")), j.at("e2").get<std::int64_t>());
}

Json interval_json(const Interval& a) {
    Json j;
    j["lo"] = scaled_json(a.lo());
    j["hi"] = scaled_json(a.hi());
    return j;
}

Interval interval_from_json(const Json& j) {
    return Interval(scaled_from_json(j.at("lo")), scaled_from_json(j.at("hi")));
}

Json sparse_json(const SparseVec& v) {
    Json j = Json::object();
    for (const auto& [i, q] : v) j[std::to_string(i)] = rational_json(q);
    return j;
}

SparseVec sparse_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("sparse vector must be an {\"index\": \"p/q\"} object");
    SparseVec v;
    for (const auto& [key, val] : j.items()) v.set(parse_index(key), rational_from_json(val));
    return v;
}

Json tailvec_json(const TailVec& v) {
    Json j = sparse_json(v.head());
    j["tail"] = rational_json(v.tail_const());
    j["horizon"] = v.horizon();
    return j;
}

TailVec tailvec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tail") || !j.contains("horizon"))
        throw ConfigError("TailVec needs \"tail\" and \"horizon\" fields");
    SparseVec head;
    for (const auto& [key, val] : j.items()) {
        if (key == "tail" || key == "horizon") continue;
        head.set(parse_index(key), rational_from_json(val));
    }
    return TailVec(std::move(head), rational_from_json(j.at("tail")), j.at("horizon").get<std::int64_t>());
}

} // namespace readspace
