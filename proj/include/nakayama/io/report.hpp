#pragma once

// JSON serialisation of classification reports and verdicts.

#include <optional>
#include <string>

#include <json.hpp> // nlohmann, vendored

#include <nakayama/classifier.hpp>
#include <nakayama/extended_nat.hpp>

namespace nakayama::io
{

using json = nlohmann::ordered_json;

inline json to_json(const extended_nat &x)
{
    if (x.is_infinite()) {
        return "infinity";
    }
    return x.value();
}

inline json to_json(const std::optional<int> &x)
{
    if (!x) {
        return nullptr;
    }
    return *x;
}

inline json to_json(const theorem_verdict &v)
{
    json j;
    j["status"] = v.status;
    j["checked_n"] = v.checked_n;
    j["witness"] = v.witness;
    j["detail"] = v.detail;
    return j;
}

inline json to_json(const verdict &v)
{
    json j;
    j["passed"] = v.passed;
    j["witness"] = v.witness;
    j["detail"] = v.detail;
    return j;
}

// Keys and their order are fixed; consumers diff these byte for byte.
inline json to_json(const classification_report &r)
{
    json j;
    j["kupisch"] = r.algebra.lengths();
    j["cyclic"] = r.algebra.cyclic();
    j["regular_id"] = to_json(r.regular_id);
    j["regular_id_left"] = to_json(r.regular_id_left);
    j["domdim"] = to_json(r.domdim);
    j["gldim"] = to_json(r.gldim);
    j["gorenstein_degree"] = to_json(r.gorenstein_degree);
    j["self_injective"] = r.self_injective;
    j["minimal_ag_n"] = to_json(r.minimal_ag_n);
    j["n_auslander_n"] = to_json(r.n_auslander_n);
    j["prinj"] = r.prinj;
    j["simple_gpd"] = r.simple_gpd ? json(*r.simple_gpd) : json(nullptr);
    json tv = json::object();
    for (const auto &[name, v] : r.theorem_verdicts) {
        tv[name] = to_json(v);
    }
    j["theorem_verdicts"] = std::move(tv);
    return j;
}

// Inverse of to_json(extended_nat); throws parse_error on anything else.
inline extended_nat extended_nat_from_json(const json &j)
{
    if (j.is_string() && j.get<std::string>() == "infinity") {
        return extended_nat::infinity();
    }
    if (j.is_number_integer() && j.get<int>() >= 0) {
        return j.get<int>();
    }
    throw parse_error("expected a non-negative integer or \"infinity\", got " + j.dump());
}

} // namespace nakayama::io
