#pragma once

#include "json.hpp"
#include "shc/charstack/restriction.hpp"
#include "shc/charstack/tft.hpp"

namespace shc::chars {

nlohmann::json to_json(const CorrespondenceValue& v);
nlohmann::json to_json(const GluingCertificate& c);
nlohmann::json to_json(const RestrictionVerdict& v);
nlohmann::json to_json(const ModuliReport& r);

}  // namespace shc::chars
