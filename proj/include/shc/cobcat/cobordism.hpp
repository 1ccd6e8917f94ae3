#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shc/exactalg/errors.hpp"

namespace shc::cob {

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NonOrientableGluing : public Error {
 public:
  using Error::Error;
};

class MalformedCobordism : public Error {
 public:
  using Error::Error;
};

// Disjoint union of circles (dim 1) or points (dim 0), each with an
// orientation sign.
struct ClosedObject {
  int dim = 1;
  std::vector<int> orientation;

  static ClosedObject circles(std::size_t n, int dim = 1);
  std::size_t size() const { return orientation.size(); }
  ClosedObject operator+(const ClosedObject& other) const;
  bool operator==(const ClosedObject&) const = default;
};

struct Component {
  int genus = 0;
  std::vector<std::size_t> inputs;
  std::vector<std::size_t> outputs;

  std::size_t boundary_count() const { return inputs.size() + outputs.size(); }
  bool closed() const { return inputs.empty() && outputs.empty(); }
  bool operator==(const Component&) const = default;
};

enum class Side { In, Out };

// Diffeomorphism class of an oriented cobordism, stored in normal form:
// components sorted by their first boundary circle, closed ones last by genus.
class Cobordism {
 public:
  Cobordism(ClosedObject source, ClosedObject target, std::vector<Component> components);

  static Cobordism identity(const ClosedObject& object);
  static Cobordism surface(int genus, std::size_t in, std::size_t out);
  static Cobordism cyl() { return surface(0, 1, 1); }
  static Cobordism cap() { return surface(0, 1, 0); }
  static Cobordism cup() { return surface(0, 0, 1); }
  static Cobordism pants() { return surface(0, 1, 2); }
  static Cobordism copants() { return surface(0, 2, 1); }
  // An interval from an input point to an output point, or a closed circle.
  static Cobordism interval();

  int dim() const { return source_.dim; }
  const ClosedObject& source() const { return source_; }
  const ClosedObject& target() const { return target_; }
  const std::vector<Component>& components() const { return components_; }

  long euler_characteristic() const;
  long euler_characteristic(const Component& c) const;

  bool operator==(const Cobordism&) const = default;

 private:
  ClosedObject source_, target_;
  std::vector<Component> components_;
};

// Glue target(first) to source(second).
Cobordism compose(const Cobordism& first, const Cobordism& second);
Cobordism tensor(const Cobordism& a, const Cobordism& b);
// Glue output circles i and j to each other.
Cobordism trace(const Cobordism& c, std::size_t i, std::size_t j);
// Reverse the orientation of one boundary circle.
Cobordism reverse_circle(const Cobordism& c, Side side, std::size_t index);

struct BoundarySign {
  Side side;
  std::size_t index;
  std::size_t component;
  int sign;
  bool operator==(const BoundarySign&) const = default;
};

// Signs of the relative fundamental class on each boundary circle:
// +orientation on outputs, -orientation on inputs.
struct OrientationReport {
  std::vector<BoundarySign> signs;
  int sign(Side side, std::size_t index) const;
};

OrientationReport relative_orientation(const Cobordism& c);

// Checks that the composite's sign table is the concatenation of the inputs
// of first and the outputs of second, with the glued circles cancelling.
OrientationReport composite_orientation(const Cobordism& first, const Cobordism& second);

std::string side_name(Side s);

}  // namespace shc::cob
