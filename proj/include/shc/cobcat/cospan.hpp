#pragma once

#include <string>
#include <vector>

#include "shc/cobcat/cobordism.hpp"
#include "shc/cobcat/word.hpp"

namespace shc::cob {

inline constexpr const char* kPresentationConvention = "prod[a_i,b_i] prod c_j = 1, [a,b] = a b a^-1 b^-1";

struct BoundaryWord {
  Side side;
  std::size_t index;
  int sign;       // relative orientation sign of the circle
  Word boundary;  // loop in the induced boundary orientation
  Word holonomy;  // loop in the circle's own orientation: boundary^sign
};

// Fundamental group of one component. Components with boundary are free on
// a_1 b_1 .. a_g b_g c_1 .. c_{b-1}; closed ones carry the genus-g relator.
struct ComponentPresentation {
  std::size_t component = 0;
  int genus = 0;
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<BoundaryWord> boundary;  // inputs then outputs, ascending

  std::size_t rank() const { return generators.size(); }
  // prod [a_i,b_i] * prod boundary words, freely reduced.
  Word standard_relator() const;
  // The standard relator is trivial in the free group (or equals the stored relator).
  bool relator_holds() const;
};

struct CospanPresentation {
  int dim = 1;
  ClosedObject source, target;
  std::vector<ComponentPresentation> components;

  // Component and boundary word of a boundary circle.
  const BoundaryWord& circle(Side side, std::size_t index, std::size_t* component = nullptr) const;
};

CospanPresentation to_cospan(const Cobordism& c);

}  // namespace shc::cob
