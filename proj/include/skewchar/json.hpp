#pragma once

// Structured output. Partitions serialize as integer arrays, decompositions as
// [{"nu": [...], "coeff": n}, ...] in descending lexicographic order of nu.

#include <json.hpp>

#include "equality.hpp"
#include "lr.hpp"
#include "mf.hpp"
#include "partition.hpp"
#include "skew_diagram.hpp"

namespace skewchar {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Partition& p) { return ojson(p.vec()); }

inline Partition partition_from_json(const ojson& j) {
    if (!j.is_array()) throw malformed_partition("expected an array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw malformed_partition("expected an array of integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

inline ojson to_json(const SkewDiagram& d) {
    return ojson{{"outer", to_json(d.outer())}, {"inner", to_json(d.inner())}};
}

inline ojson to_json(const Decomposition& dec) {
    ojson terms = ojson::array();
    for (const auto& [nu, c] : dec.terms()) terms.push_back(ojson{{"nu", to_json(nu)}, {"coeff", c}});
    return terms;
}

inline Decomposition decomposition_from_json(const ojson& terms) {
    if (!terms.is_array()) throw malformed_partition("expected an array of terms");
    Decomposition out;
    for (const auto& t : terms) out.add(partition_from_json(t.at("nu")), t.at("coeff").get<Coefficient>());
    return out;
}

inline ojson to_json(const MFVerdict& v) {
    return ojson{{"multiplicity_free", v.multiplicity_free}, {"reason", std::string(to_string(v.reason))}};
}

inline ojson to_json(const CanonicalForm& f) {
    ojson comps = ojson::array();
    for (const auto& c : f.components()) comps.push_back(to_json(c));
    return comps;
}

inline std::string_view to_string(ViolationKind k) {
    return k == ViolationKind::UnpredictedEquality ? "UnpredictedEquality" : "StaircaseConverse";
}

inline ojson to_json(const VerificationReport& r) {
    ojson classes = ojson::array();
    for (const auto& cls : r.equality_classes) {
        ojson forms = ojson::array();
        for (const auto& f : cls.forms) forms.push_back(to_json(f));
        classes.push_back(ojson{{"character", to_json(cls.character)}, {"forms", std::move(forms)}});
    }
    ojson violations = ojson::array();
    for (const auto& v : r.violations)
        violations.push_back(ojson{{"kind", std::string(to_string(v.kind))}, {"a", to_json(v.a)}, {"b", to_json(v.b)}});
    return ojson{
        {"bounds", {{"max_cells", r.bounds.max_cells}, {"max_part", r.bounds.max_part}, {"max_rows", r.bounds.max_rows}}},
        {"diagrams_examined", r.diagrams_examined},
        {"distinct_forms", r.distinct_forms},
        {"mf_count", r.mf_count},
        {"staircase_confirmations", r.staircase_confirmations},
        {"staircase_converse_checked", r.staircase_converse_checked},
        {"confirmed", r.confirmed()},
        {"violations", std::move(violations)},
        {"equality_classes", std::move(classes)},
    };
}

} // namespace skewchar
