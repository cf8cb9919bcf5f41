#pragma once

// JSON forms of the library types. Keys are emitted in a fixed order.

#include <string>

#include "json.hpp"
#include "orbitcalc/aparam.hpp"
#include "orbitcalc/duality.hpp"
#include "orbitcalc/harness.hpp"
#include "orbitcalc/partition.hpp"
#include "orbitcalc/symbols.hpp"
#include "orbitcalc/waldspurger.hpp"

namespace orbitcalc {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json type_json(GroupType t) { return std::string(1, to_char(t)); }

inline Json to_json(const Bipartition& rho) {
    Json j;
    j["alpha"] = rho.alpha;
    j["beta"] = rho.beta;
    if (rho.decoration != Decoration::None) j["decoration"] = to_string(rho.decoration);
    return j;
}

inline Json to_json(const Symbol& s) {
    Json j;
    j["top"] = s.top;
    j["bottom"] = s.bottom;
    return j;
}

inline Json to_json(const Summand& s) {
    Json j;
    j["rho_dim"] = s.rho_dim;
    j["rho_type"] = std::string(1, to_char(s.rho_type));
    j["a"] = s.a;
    j["b"] = s.b;
    return j;
}

inline Json to_json(const AParameterShape& psi) {
    Json j;
    j["group"] = psi.group_name();
    j["type"] = type_json(psi.target);
    j["rank"] = psi.rank;
    j["summands"] = Json::array();
    for (const auto& s : psi.summands) j["summands"].push_back(to_json(s));
    return j;
}

inline Json to_json(const VerificationReport& r, bool with_time) {
    Json j;
    j["property"] = r.property;
    j["bound"] = r.bound;
    j["cases_checked"] = r.cases_checked;
    j["failure_count"] = r.failure_count;
    j["failures"] = Json::array();
    for (const auto& f : r.failures) {
        Json fj;
        fj["inputs"] = f.inputs;
        fj["relation"] = f.relation;
        fj["observed"] = f.observed;
        j["failures"].push_back(std::move(fj));
    }
    j["notes"] = r.notes;
    j["passed"] = r.passed();
    if (with_time) j["wall_time"] = r.wall_time;
    return j;
}

}  // namespace orbitcalc
