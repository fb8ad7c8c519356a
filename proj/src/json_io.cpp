#include "gonalbn/json_io.hpp"

#include <stdexcept>

namespace gonalbn {

using nlohmann::json;

namespace {

json vector_to_json(const SplittingVector& v) { return json(v.entries()); }

SplittingVector vector_from_json(const json& j) {
    return SplittingVector(j.get<std::vector<std::int64_t>>());
}

json component_to_json(const Rank1Component& c) {
    json j{
        {"ell", c.ell},
        {"vector", vector_to_json(c.vector)},
        {"dim", c.dimension},
        {"codim", c.codimension},
        {"generic_element", {{"kind", to_string(c.generic_element.kind)}}},
    };
    if (c.generic_element.kind == GenericElementKind::PencilPlusBase ||
        c.generic_element.kind == GenericElementKind::DoubleGonalPlusBase) {
        j["generic_element"]["base_degree"] = c.generic_element.base_degree;
    }
    return j;
}

Rank1Component component_from_json(const json& j) {
    Rank1Component c{0, vector_from_json(j.at("vector")), 0, 0, {}};
    c.ell = j.at("ell").get<int>();
    c.dimension = j.at("dim").get<std::int64_t>();
    c.codimension = j.at("codim").get<std::int64_t>();
    const auto& ge = j.at("generic_element");
    c.generic_element.kind =
        generic_element_kind_from_string(ge.at("kind").get<std::string>());
    if (ge.contains("base_degree")) {
        c.generic_element.base_degree = ge.at("base_degree").get<std::int64_t>();
    }
    return c;
}

json presentation_to_json(const Presentation& p) {
    json j{{"kernel_degree", p.kernel_degree}, {"quotient", to_string(p.quotient)}};
    if (p.s) j["s"] = *p.s;
    if (p.t) j["t"] = *p.t;
    if (!p.constraint.empty()) j["constraint"] = p.constraint;
    return j;
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.kernel_degree = j.at("kernel_degree").get<std::int64_t>();
    p.quotient = quotient_from_string(j.at("quotient").get<std::string>());
    if (j.contains("s")) p.s = j.at("s").get<std::int64_t>();
    if (j.contains("t")) p.t = j.at("t").get<std::int64_t>();
    if (j.contains("constraint")) p.constraint = j.at("constraint").get<std::string>();
    return p;
}

}  // namespace

json to_json(const Rank1Query& q) {
    json j{{"g", q.g}, {"nu", q.nu}, {"d", q.d}, {"r", q.r}};
    j["status"] = q.locus.whole_picard ? "picard"
                  : q.locus.empty()    ? "empty"
                                       : "components";
    j["components"] = json::array();
    for (const auto& c : q.locus.components) j["components"].push_back(component_to_json(c));
    if (!q.locus.warnings.empty()) j["warnings"] = q.locus.warnings;
    return j;
}

Rank1Query rank1_query_from_json(const json& j) {
    Rank1Query q;
    q.g = j.at("g").get<std::int64_t>();
    q.nu = j.at("nu").get<int>();
    q.d = j.at("d").get<std::int64_t>();
    q.r = j.at("r").get<int>();
    q.locus.whole_picard = j.at("status").get<std::string>() == "picard";
    for (const auto& c : j.at("components")) {
        q.locus.components.push_back(component_from_json(c));
    }
    if (j.contains("warnings")) {
        q.locus.warnings = j.at("warnings").get<std::vector<std::string>>();
    }
    return q;
}

json to_json(const ClassifierReport& r) {
    json j{{"g", r.g},   {"nu", r.nu},   {"d", r.d},
           {"status", to_string(r.status)}};
    if (r.status == ReportStatus::NotApplicable) {
        j["reason"] = r.not_applicable_reason;
        return j;
    }
    j["k3"] = r.k3;
    j["rho"] = r.rho;
    j["components"] = json::array();
    for (const auto& c : r.components) {
        j["components"].push_back(json{
            {"family", to_string(c.family)},
            {"dim", c.dimension},
            {"rho", c.rho},
            {"regularity", to_string(c.regularity)},
            {"uniruled", c.uniruled},
            {"generically_smooth", c.generically_smooth},
            {"clause", c.clause},
            {"presentation", presentation_to_json(c.presentation)},
        });
    }
    j["empties"] = r.empties;
    j["unknowns"] = json::array();
    for (const auto& u : r.unknowns) {
        j["unknowns"].push_back(json{{"family", u.family}, {"reason", u.reason}});
    }
    j["excluded_types"] = json::array();
    for (const auto& e : r.excluded_types) {
        j["excluded_types"].push_back(
            json{{"family", e.family}, {"clause", e.clause}, {"note", e.note}});
    }
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    j["speciality_guard"] = json{{"bound", r.guard.bound}, {"statement", r.guard.statement}};
    return j;
}

ClassifierReport classifier_report_from_json(const json& j) {
    ClassifierReport r;
    r.g = j.at("g").get<std::int64_t>();
    r.nu = j.at("nu").get<int>();
    r.d = j.at("d").get<std::int64_t>();
    r.status = status_from_string(j.at("status").get<std::string>());
    if (r.status == ReportStatus::NotApplicable) {
        r.not_applicable_reason = j.at("reason").get<std::string>();
        r.guard = speciality_guard(3);
        return r;
    }
    r.k3 = j.at("k3").get<std::int64_t>();
    r.rho = j.at("rho").get<std::int64_t>();
    for (const auto& c : j.at("components")) {
        Rank2Component comp;
        comp.family = family_from_string(c.at("family").get<std::string>());
        comp.dimension = c.at("dim").get<std::int64_t>();
        comp.rho = c.at("rho").get<std::int64_t>();
        comp.regularity = regularity_from_string(c.at("regularity").get<std::string>());
        comp.uniruled = c.at("uniruled").get<bool>();
        comp.generically_smooth = c.at("generically_smooth").get<bool>();
        comp.clause = c.at("clause").get<std::string>();
        comp.presentation = presentation_from_json(c.at("presentation"));
        r.components.push_back(std::move(comp));
    }
    r.empties = j.at("empties").get<std::vector<std::string>>();
    for (const auto& u : j.at("unknowns")) {
        r.unknowns.push_back(
            {u.at("family").get<std::string>(), u.at("reason").get<std::string>()});
    }
    for (const auto& e : j.at("excluded_types")) {
        r.excluded_types.push_back({e.at("family").get<std::string>(),
                                    e.at("clause").get<std::string>(),
                                    e.at("note").get<std::string>()});
    }
    if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.guard.bound = j.at("speciality_guard").at("bound").get<std::int64_t>();
    r.guard.statement = j.at("speciality_guard").at("statement").get<std::string>();
    return r;
}

json to_json(const FixedDetReport& r) {
    json j{{"g", r.g}, {"nu", r.nu}, {"d", r.d}, {"status", to_string(r.status)}};
    if (r.status == ReportStatus::NotApplicable) {
        j["reason"] = r.not_applicable_reason;
        return j;
    }
    j["rho_m"] = r.rho_m;
    j["components"] = json::array();
    for (const auto& c : r.components) {
        j["components"].push_back(json{{"family", c.family},
                                       {"dim", c.dimension},
                                       {"regularity", to_string(c.regularity)},
                                       {"clause", c.clause}});
    }
    j["empties"] = r.empties;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

FixedDetReport fixed_det_report_from_json(const json& j) {
    FixedDetReport r;
    r.g = j.at("g").get<std::int64_t>();
    r.nu = j.at("nu").get<int>();
    r.d = j.at("d").get<std::int64_t>();
    r.status = status_from_string(j.at("status").get<std::string>());
    if (r.status == ReportStatus::NotApplicable) {
        r.not_applicable_reason = j.at("reason").get<std::string>();
        return r;
    }
    r.rho_m = j.at("rho_m").get<std::int64_t>();
    for (const auto& c : j.at("components")) {
        FixedDetComponent comp;
        comp.family = c.at("family").get<std::string>();
        comp.dimension = c.at("dim").get<std::int64_t>();
        comp.regularity = regularity_from_string(c.at("regularity").get<std::string>());
        comp.clause = c.at("clause").get<std::string>();
        r.components.push_back(std::move(comp));
    }
    r.empties = j.at("empties").get<std::vector<std::string>>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

json to_json(const Atlas& a) {
    json j{{"g", a.g}, {"nu", a.nu}, {"d_min", a.d_min}, {"d_max", a.d_max}};
    j["regions"] = json::array();
    for (const auto& region : a.regions) {
        json rj{{"d_min", region.d_min},
                {"d_max", region.d_max},
                {"status", to_string(region.status)},
                {"families", region.families},
                {"unknown_families", region.unknown_families}};
        rj["annotations"] = json::array();
        for (const auto& an : region.annotations) {
            rj["annotations"].push_back(json{{"d", an.d}, {"label", an.label}});
        }
        j["regions"].push_back(std::move(rj));
    }
    return j;
}

Atlas atlas_from_json(const json& j) {
    Atlas a;
    a.g = j.at("g").get<std::int64_t>();
    a.nu = j.at("nu").get<int>();
    a.d_min = j.at("d_min").get<std::int64_t>();
    a.d_max = j.at("d_max").get<std::int64_t>();
    for (const auto& rj : j.at("regions")) {
        AtlasRegion region;
        region.d_min = rj.at("d_min").get<std::int64_t>();
        region.d_max = rj.at("d_max").get<std::int64_t>();
        region.status = status_from_string(rj.at("status").get<std::string>());
        region.families = rj.at("families").get<std::vector<std::string>>();
        region.unknown_families = rj.at("unknown_families").get<std::vector<std::string>>();
        for (const auto& an : rj.at("annotations")) {
            region.annotations.push_back(
                {an.at("d").get<std::int64_t>(), an.at("label").get<std::string>()});
        }
        a.regions.push_back(std::move(region));
    }
    return a;
}

namespace {

json sweep_to_json(const SweepReport& r) {
    return json{{"cells", r.cells}, {"failures", r.failures}};
}

SweepReport sweep_from_json(const json& j) {
    SweepReport r;
    r.cells = j.at("cells").get<std::int64_t>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    return r;
}

json issues_to_json(const std::vector<CrosscheckIssue>& issues) {
    json arr = json::array();
    for (const auto& i : issues) {
        arr.push_back(
            json{{"g", i.g}, {"nu", i.nu}, {"t", i.t}, {"r", i.r}, {"what", i.what}});
    }
    return arr;
}

std::vector<CrosscheckIssue> issues_from_json(const json& arr) {
    std::vector<CrosscheckIssue> out;
    for (const auto& i : arr) {
        out.push_back({i.at("g").get<std::int64_t>(), i.at("nu").get<int>(),
                       i.at("t").get<std::int64_t>(), i.at("r").get<int>(),
                       i.at("what").get<std::string>()});
    }
    return out;
}

}  // namespace

json to_json(const VerificationReport& r) {
    return json{
        {"g_max", r.g_max},
        {"nu_max", r.nu_max},
        {"pass", r.pass()},
        {"tables",
         {{"cells", r.tables.cells},
          {"oracle_cells", r.tables.oracle_cells},
          {"failures", issues_to_json(r.tables.failures)},
          {"notes", issues_to_json(r.tables.notes)}}},
        {"oracle_sweep", sweep_to_json(r.oracle_sweep)},
        {"properties", sweep_to_json(r.properties)},
        {"rank_two", sweep_to_json(r.rank_two)},
    };
}

VerificationReport verification_report_from_json(const json& j) {
    VerificationReport r;
    r.g_max = j.at("g_max").get<std::int64_t>();
    r.nu_max = j.at("nu_max").get<int>();
    const auto& t = j.at("tables");
    r.tables.cells = t.at("cells").get<std::int64_t>();
    r.tables.oracle_cells = t.at("oracle_cells").get<std::int64_t>();
    r.tables.failures = issues_from_json(t.at("failures"));
    r.tables.notes = issues_from_json(t.at("notes"));
    r.oracle_sweep = sweep_from_json(j.at("oracle_sweep"));
    r.properties = sweep_from_json(j.at("properties"));
    r.rank_two = sweep_from_json(j.at("rank_two"));
    return r;
}

Family family_from_string(const std::string& s) {
    if (s == "FirstType_1a") return Family::FirstType1a;
    if (s == "ModType_2b_mod") return Family::ModType2bMod;
    if (s == "Regular_Ei") return Family::RegularEi;
    if (s == "Regular_Eii") return Family::RegularEii;
    throw std::invalid_argument("unknown family tag: " + s);
}

Regularity regularity_from_string(const std::string& s) {
    if (s == "Regular") return Regularity::Regular;
    if (s == "Superabundant") return Regularity::Superabundant;
    throw std::invalid_argument("unknown regularity tag: " + s);
}

QuotientKind quotient_from_string(const std::string& s) {
    if (s == "CanonicalMinusTwoGonal") return QuotientKind::CanonicalMinusTwoGonal;
    if (s == "CanonicalMinusGonal") return QuotientKind::CanonicalMinusGonal;
    if (s == "Canonical") return QuotientKind::Canonical;
    if (s == "CanonicalMinusNet") return QuotientKind::CanonicalMinusNet;
    throw std::invalid_argument("unknown quotient tag: " + s);
}

ReportStatus status_from_string(const std::string& s) {
    if (s == "NotApplicable") return ReportStatus::NotApplicable;
    if (s == "AssertedEmpty") return ReportStatus::AssertedEmpty;
    if (s == "HasComponents") return ReportStatus::HasComponents;
    if (s == "PartiallyKnown") return ReportStatus::PartiallyKnown;
    throw std::invalid_argument("unknown status tag: " + s);
}

GenericElementKind generic_element_kind_from_string(const std::string& s) {
    if (s == "PencilPlusBase") return GenericElementKind::PencilPlusBase;
    if (s == "FreePencil") return GenericElementKind::FreePencil;
    if (s == "DoubleGonalPlusBase") return GenericElementKind::DoubleGonalPlusBase;
    if (s == "GonalPlusMovable") return GenericElementKind::GonalPlusMovable;
    if (s == "FreeNet") return GenericElementKind::FreeNet;
    if (s == "GeneralLineBundle") return GenericElementKind::GeneralLineBundle;
    if (s == "Unspecified") return GenericElementKind::Unspecified;
    throw std::invalid_argument("unknown generic element kind: " + s);
}

}  // namespace gonalbn
