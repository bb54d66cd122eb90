#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "corepart/enumerate.hpp"
#include "corepart/formulas.hpp"
#include "corepart/genfunc.hpp"
#include "corepart/partition.hpp"

namespace corepart {

// Field order in emitted JSON is fixed (ordered_json), so equal values
// serialize to equal bytes — cache hits and engine-identity checks rely on it.
using Json = nlohmann::ordered_json;

inline Json json_of_partition(const Partition& p) {
    return Json(p.parts());
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

inline Json json_of_beta_set(const BetaSet& x) {
    return Json(x.elements());
}

inline Json json_of_query(const EnumerationQuery& q, bool with_engine = true) {
    Json j;
    j["spec"] = q.spec.values();
    j["d"] = q.d;
    j["bound"] = q.bound ? Json(*q.bound) : Json(nullptr);
    if (with_engine) j["engine"] = engine_name(q.engine);
    return j;
}

inline EnumerationQuery query_from_json(const Json& j) {
    EnumerationQuery q{CoreSpec(j.at("spec").get<std::vector<int>>()), j.at("d").get<int>(), std::nullopt,
                       engine_from_name(j.at("engine").get<std::string>())};
    if (!j.at("bound").is_null()) q.bound = j.at("bound").get<int>();
    return q;
}

inline Json json_of_result(const EnumerationResult& r, bool with_partitions = true, bool with_engine = true) {
    Json j;
    j["query"] = json_of_query(r.query, with_engine);
    if (with_engine) j["engine"] = r.engine;
    j["bound"] = Json{{"value", r.bound.value}, {"reason", r.bound.reason}, {"explicit", r.bound.explicit_override}};
    j["count"] = r.count;
    j["max_size"] = r.max_size;
    Json argmax = Json::array();
    for (const auto& p : r.argmax) argmax.push_back(json_of_partition(p));
    j["argmax"] = argmax;
    if (with_partitions) {
        Json parts = Json::array();
        for (const auto& p : r.partitions) parts.push_back(json_of_partition(p));
        j["partitions"] = parts;
    }
    Json hist = Json::object();
    for (const auto& [size, count] : r.histogram) hist[std::to_string(size)] = count;
    j["histogram"] = hist;
    return j;
}

/// Inverse of json_of_result for the full form (partitions and engine present).
inline EnumerationResult result_from_json(const Json& j) {
    EnumerationQuery q = query_from_json(j.at("query"));
    const Json& jb = j.at("bound");
    BoundInfo bound{jb.at("value").get<int>(), jb.at("reason").get<std::string>(),
                    jb.at("explicit").get<bool>()};
    EnumerationResult r{std::move(q), std::move(bound), j.at("engine").get<std::string>(), {}, 0, 0, {}, {}};
    r.count = j.at("count").get<std::int64_t>();
    r.max_size = j.at("max_size").get<std::int64_t>();
    for (const auto& p : j.at("argmax")) r.argmax.push_back(partition_from_json(p));
    for (const auto& p : j.at("partitions")) r.partitions.push_back(partition_from_json(p));
    for (const auto& [key, value] : j.at("histogram").items())
        r.histogram[std::stoll(key)] = value.get<std::int64_t>();
    return r;
}

inline Json json_of_count_sequence(const CountSequence& seq) {
    Json params = Json::object();
    for (const auto& [name, value] : seq.params) params[name] = value;
    Json j;
    j["family"] = seq.family;
    j["params"] = params;
    j["conjectural"] = seq.conjectural;
    j["first_index"] = seq.first_index;
    j["values"] = seq.values;
    return j;
}

inline Json json_of_polynomial(const IntPolynomial& p) {
    return Json(p.coefficients());
}

inline Json json_of_gf(const RationalGF& gf) {
    return Json{{"num", json_of_polynomial(gf.num)}, {"den", json_of_polynomial(gf.den)}};
}

/// Canonical one-line form of a query; hashing it names the cache entry.
inline std::string canonical_query_string(const EnumerationQuery& q) {
    std::string s = "spec=";
    const auto& v = q.spec.values();
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    s += ";d=" + std::to_string(q.d);
    s += ";bound=" + (q.bound ? std::to_string(*q.bound) : std::string("none"));
    s += ";engine=" + engine_name(q.engine);
    return s;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

} // namespace corepart
