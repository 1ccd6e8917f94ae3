#pragma once

#include <cstdint>
#include <vector>

#include "shc/charstack/finite_group.hpp"
#include "shc/cobcat/cospan.hpp"

namespace shc::chars {

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

using Elem = FiniteGroup::Elem;

// Homomorphisms from a presented group, in lexicographic order of the
// generator images. `flat` holds rank() images per representation.
struct RepList {
  std::size_t rank = 0;
  std::uint64_t count = 0;
  std::vector<Elem> flat;

  std::vector<Elem> rep(std::size_t i) const {
    return {flat.begin() + static_cast<long>(i * rank), flat.begin() + static_cast<long>((i + 1) * rank)};
  }
};

Elem eval_word(const FiniteGroup& g, const cob::Word& w, const Elem* images);

// Throws BudgetExceeded when |G|^rank exceeds budget.
std::uint64_t search_size(const FiniteGroup& g, std::size_t rank, std::uint64_t budget);

// Serial reference enumeration.
RepList enumerate_reps_serial(const FiniteGroup& g, const cob::ComponentPresentation& p, std::uint64_t budget,
                              bool keep = true);
// OpenMP enumeration partitioned over the image of the first generator;
// output identical to the serial reference.
RepList enumerate_reps(const FiniteGroup& g, const cob::ComponentPresentation& p, std::uint64_t budget,
                       bool keep = true);

// |Rep| of a disjoint union is the product over components.
std::uint64_t count_reps(const FiniteGroup& g, const cob::CospanPresentation& p, std::uint64_t budget);

// #{(a, b) : ab = ba}, computed from the table alone.
std::uint64_t commuting_pairs(const FiniteGroup& g);

}  // namespace shc::chars
