#pragma once

#include <string>

#include "json.hpp"

#include "gonalbn/rank_one.hpp"
#include "gonalbn/rank_two.hpp"
#include "gonalbn/verify.hpp"

namespace gonalbn {

/// Query result for the rank-one component listing.
struct Rank1Query {
    std::int64_t g = 0;
    int nu = 0;
    std::int64_t d = 0;
    int r = 0;
    Rank1Locus locus;
};

nlohmann::json to_json(const Rank1Query& q);
nlohmann::json to_json(const ClassifierReport& r);
nlohmann::json to_json(const FixedDetReport& r);
nlohmann::json to_json(const Atlas& a);
nlohmann::json to_json(const VerificationReport& r);

Rank1Query rank1_query_from_json(const nlohmann::json& j);
ClassifierReport classifier_report_from_json(const nlohmann::json& j);
FixedDetReport fixed_det_report_from_json(const nlohmann::json& j);
Atlas atlas_from_json(const nlohmann::json& j);
VerificationReport verification_report_from_json(const nlohmann::json& j);

Family family_from_string(const std::string& s);
Regularity regularity_from_string(const std::string& s);
QuotientKind quotient_from_string(const std::string& s);
ReportStatus status_from_string(const std::string& s);
GenericElementKind generic_element_kind_from_string(const std::string& s);

}  // namespace gonalbn
