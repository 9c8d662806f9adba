#pragma once

#include <json.hpp>

#include "untwist/knot_invariants.hpp"
#include "untwist/laurent.hpp"
#include "untwist/obstruction.hpp"

namespace untwist {

using Json = nlohmann::ordered_json;

// Stable report schema; key order is fixed and every key is always present.
inline Json report_to_json(const ObstructionReport& r) {
    Json j;
    j["knot"] = r.knot;
    j["k"] = to_int64(r.k);

    Json alex;
    alex["pass"] = r.alexander.passed();
    alex["alpha"] =
        r.alexander.passed() ? Json(to_string(*r.alexander.alpha)) : Json(nullptr);
    if (r.alexander.failing) {
        Json fc;
        fc["exponent"] = r.alexander.failing->exponent;
        fc["value"] = to_int64(r.alexander.failing->value);
        alex["failing_coefficient"] = fc;
    } else {
        alex["failing_coefficient"] = nullptr;
    }
    j["alexander"] = alex;

    Json cyc;
    cyc["pass"] = r.cyclicity.passed;
    Json factors = Json::array();
    for (const Int& f : r.cyclicity.invariant_factors)
        factors.push_back(to_int64(f));
    cyc["invariant_factors"] = factors;
    j["cyclicity"] = cyc;

    Json link;
    switch (r.linking.status) {
        case LinkingStatus::Pass: link["status"] = "pass"; break;
        case LinkingStatus::Fail: link["status"] = "fail"; break;
        case LinkingStatus::Skipped: link["status"] = "skipped"; break;
    }
    link["d"] = r.linking.d ? Json(to_int64(*r.linking.d)) : Json(nullptr);
    auto form_json = [](const std::optional<CyclicForm>& f) {
        if (!f) return Json(nullptr);
        Json out;
        out["n"] = to_int64(f->n);
        out["a"] = to_int64(f->a);
        return out;
    };
    link["knot_form"] = form_json(r.linking.knot_form);
    link["candidate_form"] = form_json(r.linking.candidate_form);
    j["linking"] = link;

    j["verdict"] =
        r.verdict == Verdict::NotObstructed ? "NOT_OBSTRUCTED" : "OBSTRUCTED";
    j["ua_bound"] = r.ua ? Json(*r.ua) : Json(nullptr);
    j["n_Rk"] = r.n_rk ? Json(*r.n_rk) : Json(nullptr);
    return j;
}

inline Json invariants_to_json(const KnotInvariants& inv) {
    Json j;
    j["alexander"] = to_string(inv.alexander);
    j["determinant_at_minus_one"] = to_int64(inv.alexander_at_minus_one);
    Json factors = Json::array();
    for (const Int& f : inv.dbc_invariant_factors)
        factors.push_back(to_int64(f));
    j["dbc_invariant_factors"] = factors;
    return j;
}

}  // namespace untwist
