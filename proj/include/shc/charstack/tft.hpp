#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shc/charstack/enumerate.hpp"
#include "shc/cobcat/cobordism.hpp"
#include "shc/cobcat/cospan.hpp"

namespace shc::chars {

// Rep(c) -> Rep(source) x Rep(target), with Rep of a circle identified with G
// through its holonomy.
struct CorrespondenceValue {
  cob::CospanPresentation apex;
  std::string group;
  std::vector<std::uint64_t> component_counts;
  std::uint64_t apex_count = 0;
  std::uint64_t source_count = 0;  // |G|^#inputs
  std::uint64_t target_count = 0;
  std::uint64_t image_count = 0;  // distinct boundary holonomy tuples
  bool legs_consistent = false;   // circle generators go to the stored boundary words
  bool diagonal = false;          // x -> (x, x) on every circle
};

CorrespondenceValue tft_evaluate(const cob::Cobordism& c, const FiniteGroup& g, std::uint64_t budget);

// |Rep(second o first)| against the fiber product over the middle circles:
// glued holonomies agree along a spanning forest, each further gluing
// contributes #{t : t x t^-1 = y}.
struct GluingCertificate {
  std::string composite;  // normal form
  std::string group;
  std::uint64_t direct_count = 0;
  std::uint64_t fiber_count = 0;
  std::size_t tree_gluings = 0;
  std::size_t extra_gluings = 0;

  bool holds() const { return direct_count == fiber_count; }
};

GluingCertificate gluing_certificate(const cob::Cobordism& first, const cob::Cobordism& second, const FiniteGroup& g,
                                     std::uint64_t budget);

}  // namespace shc::chars
