#include "shc/cobcat/serialize.hpp"

#include "shc/cobcat/parser.hpp"

namespace shc::cob {

using nlohmann::json;

json to_json(const Cobordism& c) {
  json comps = json::array();
  for (const auto& comp : c.components())
    comps.push_back({{"genus", comp.genus}, {"inputs", comp.inputs}, {"outputs", comp.outputs}});
  return {{"dim", c.dim()},
          {"source", c.source().orientation},
          {"target", c.target().orientation},
          {"components", comps},
          {"euler_characteristic", c.euler_characteristic()},
          {"normal_form", print(c)}};
}

Cobordism cobordism_from_json(const json& j) {
  try {
    int dim = j.value("dim", 1);
    ClosedObject s{dim, j.at("source").get<std::vector<int>>()};
    ClosedObject t{dim, j.at("target").get<std::vector<int>>()};
    std::vector<Component> comps;
    for (const auto& c : j.at("components"))
      comps.push_back({c.at("genus").get<int>(), c.at("inputs").get<std::vector<std::size_t>>(),
                       c.at("outputs").get<std::vector<std::size_t>>()});
    return Cobordism(s, t, comps);
  } catch (const json::exception& e) {
    throw MalformedCobordism(std::string("cobordism json: ") + e.what());
  }
}

json to_json(const CospanPresentation& p) {
  json comps = json::array();
  for (const auto& c : p.components) {
    json bws = json::array();
    for (const auto& b : c.boundary)
      bws.push_back({{"side", side_name(b.side)},
                     {"index", b.index},
                     {"sign", b.sign},
                     {"boundary", b.boundary.to_string(c.generators)},
                     {"holonomy", b.holonomy.to_string(c.generators)},
                     {"letters", b.boundary.letters()}});
    json rels = json::array();
    for (const auto& r : c.relators) rels.push_back(r.to_string(c.generators));
    comps.push_back({{"component", c.component},
                     {"genus", c.genus},
                     {"generators", c.generators},
                     {"relators", rels},
                     {"boundary", bws},
                     {"relator_holds", c.relator_holds()}});
  }
  return {{"dim", p.dim}, {"convention", kPresentationConvention}, {"components", comps}};
}

json to_json(const OrientationReport& r) {
  json out = json::array();
  for (const auto& s : r.signs)
    out.push_back({{"side", side_name(s.side)}, {"index", s.index}, {"component", s.component}, {"sign", s.sign}});
  return out;
}

}  // namespace shc::cob
