#include "shc/cobcat/cospan.hpp"

namespace shc::cob {

Word ComponentPresentation::standard_relator() const {
  Word w;
  for (int i = 0; i < genus; ++i) w = w * commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
  for (const auto& b : boundary) w = w * b.boundary;
  return w;
}

bool ComponentPresentation::relator_holds() const {
  Word w = standard_relator();
  if (relators.empty()) return w.empty();
  return relators.size() == 1 && relators.front() == w;
}

const BoundaryWord& CospanPresentation::circle(Side side, std::size_t index, std::size_t* component) const {
  for (std::size_t n = 0; n < components.size(); ++n)
    for (const auto& b : components[n].boundary)
      if (b.side == side && b.index == index) {
        if (component) *component = n;
        return b;
      }
  throw ArityMismatch("no such boundary circle");
}

CospanPresentation to_cospan(const Cobordism& c) {
  CospanPresentation p{c.dim(), c.source(), c.target(), {}};
  auto signs = relative_orientation(c);
  const auto& comps = c.components();
  for (std::size_t n = 0; n < comps.size(); ++n) {
    const Component& comp = comps[n];
    ComponentPresentation cp;
    cp.component = n;
    cp.genus = comp.genus;
    std::vector<std::pair<Side, std::size_t>> circles;
    for (auto k : comp.inputs) circles.push_back({Side::In, k});
    for (auto k : comp.outputs) circles.push_back({Side::Out, k});

    if (c.dim() == 0) {
      // Intervals are contractible; a closed 1-manifold is a circle.
      if (comp.closed()) cp.generators = {"c1"};
      for (auto [side, k] : circles) cp.boundary.push_back({side, k, signs.sign(side, k), Word(), Word()});
      p.components.push_back(cp);
      continue;
    }

    for (int i = 1; i <= comp.genus; ++i) {
      cp.generators.push_back("a" + std::to_string(i));
      cp.generators.push_back("b" + std::to_string(i));
    }
    Word prefix;
    for (int i = 0; i < comp.genus; ++i) prefix = prefix * commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
    for (std::size_t j = 0; j < circles.size(); ++j) {
      auto [side, k] = circles[j];
      int sign = signs.sign(side, k);
      Word w;
      if (j + 1 < circles.size()) {
        cp.generators.push_back("c" + std::to_string(j + 1));
        w = Word::generator(static_cast<int>(cp.generators.size()) - 1);
        prefix = prefix * w;
      } else {
        w = prefix.inverse();
      }
      cp.boundary.push_back({side, k, sign, w, w.power(sign)});
    }
    if (comp.closed()) cp.relators.push_back(prefix);
    p.components.push_back(cp);
  }
  return p;
}

}  // namespace shc::cob
