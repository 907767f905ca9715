#pragma once

#include <json.hpp>

#include "domains.hpp"
#include "paths.hpp"
#include "sequences.hpp"
#include "tableaux.hpp"
#include "verify.hpp"

namespace aztec {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return p.parts(); }

inline json header_json(const char* model, const Partition& mu, Case c) {
    return {{"model", model}, {"case", case_number(c)}, {"mu", to_json(mu)}};
}

inline json to_json(const PartitionSequence& s) {
    json chain = json::array();
    for (const auto& lam : s.chain) chain.push_back(to_json(lam));
    return chain;
}

inline json to_json(const Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const Entry& e : row) r.push_back(e.str());
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const PathFamily& f) {
    json paths = json::array();
    for (const auto& p : f.paths) {
        Point e = p.end();
        paths.push_back({{"start", {p.start.x, p.start.y}}, {"end", {e.x, e.y}}, {"steps", p.steps}});
    }
    return paths;
}

inline json to_json(const Tiling& t) {
    json dominoes = json::array();
    for (const Domino& x : t.dominoes)
        dominoes.push_back({{"d", x.start.d}, {"p", x.start.p}, {"orient", x.orient == Orientation::vertical ? "V" : "H"}});
    return {{"mu", to_json(t.domain.mu)}, {"case", case_number(t.domain.kind)}, {"dominoes", dominoes}};
}

inline Tiling tiling_from_json(const json& j) {
    try {
        Partition mu(j.at("mu").get<std::vector<int>>());
        Tiling t{build_domain(mu, case_from_number(j.at("case").get<int>())), {}};
        for (const auto& x : j.at("dominoes")) {
            std::string o = x.at("orient").get<std::string>();
            if (o != "V" && o != "H") throw ContractViolation("domino orientation must be \"V\" or \"H\"");
            t.dominoes.push_back({{x.at("d").get<long>(), x.at("p").get<long>()},
                                  o == "V" ? Orientation::vertical : Orientation::horizontal});
        }
        std::sort(t.dominoes.begin(), t.dominoes.end());
        return t;
    } catch (const json::exception& e) {
        throw ContractViolation(std::string("malformed tiling JSON: ") + e.what());
    }
}

namespace detail {

inline json param_value(const std::string& v) {
    if (!v.empty() && v.find_first_not_of("-0123456789") == std::string::npos) return std::stol(v);
    return v;
}

}  // namespace detail

// params: integers as numbers, other values (rationals, names) as strings;
// residual: exact rationals as strings, present only on failure
inline json to_json(const CheckReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = detail::param_value(v);
    json j = {{"suite", r.suite}, {"params", params}, {"pass", r.pass}};
    if (!r.pass) {
        json res = json::array();
        for (const Rat& x : r.residual) res.push_back(x.get_str());
        j["residual"] = res;
    }
    return j;
}

inline json to_json(const std::vector<CheckReport>& reports) {
    json a = json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    return a;
}

}  // namespace aztec
