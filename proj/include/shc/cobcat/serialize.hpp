#pragma once

#include "json.hpp"
#include "shc/cobcat/cospan.hpp"

namespace shc::cob {

// {"dim", "source", "target", "components": [{"genus", "inputs", "outputs"}],
//  "euler_characteristic", "normal_form"}
nlohmann::json to_json(const Cobordism& c);
Cobordism cobordism_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CospanPresentation& p);
nlohmann::json to_json(const OrientationReport& r);

}  // namespace shc::cob
