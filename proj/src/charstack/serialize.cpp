#include "shc/charstack/serialize.hpp"

#include "shc/cobcat/serialize.hpp"

namespace shc::chars {

using nlohmann::json;

json to_json(const CorrespondenceValue& v) {
  json legs = json::array();
  for (const auto& comp : v.apex.components)
    for (const auto& bw : comp.boundary)
      legs.push_back({{"side", cob::side_name(bw.side)},
                      {"circle", bw.index},
                      {"component", comp.component},
                      {"sign", bw.sign},
                      {"holonomy", bw.holonomy.to_string(comp.generators)}});
  return {{"group", v.group},
          {"apex", cob::to_json(v.apex)},
          {"legs", legs},
          {"component_counts", v.component_counts},
          {"apex_count", v.apex_count},
          {"source_count", v.source_count},
          {"target_count", v.target_count},
          {"image_count", v.image_count},
          {"legs_consistent", v.legs_consistent},
          {"diagonal", v.diagonal}};
}

json to_json(const GluingCertificate& c) {
  return {{"composite", c.composite},
          {"group", c.group},
          {"direct_count", c.direct_count},
          {"fiber_count", c.fiber_count},
          {"tree_gluings", c.tree_gluings},
          {"extra_gluings", c.extra_gluings},
          {"holds", c.holds()}};
}

json to_json(const RestrictionVerdict& v) {
  return {{"status", status_name(v.status)},
          {"boundary_dim", v.boundary_dim},
          {"image_h0", v.image_h0},
          {"image_h1", v.image_h1},
          {"isotropic", v.isotropic},
          {"half_dimensional", v.half_dimensional},
          {"smooth", v.smooth},
          {"witness_holds", v.witness_holds},
          {"chain_lagrangian", v.chain_lagrangian}};
}

json to_json(const ModuliReport& r) {
  return {{"lowest_degree", r.lo},
          {"cohomology", r.cohomology},
          {"euler_characteristic", r.euler},
          {"expected_euler_characteristic", r.expected_euler},
          {"witness_holds", r.witness_holds},
          {"skew", r.skew},
          {"reduced_dim", r.reduced_dim},
          {"pairing_rank", r.pairing_rank},
          {"nondegenerate", r.nondegenerate},
          {"smooth", r.smooth}};
}

}  // namespace shc::chars
