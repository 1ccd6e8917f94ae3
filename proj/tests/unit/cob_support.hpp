#pragma once

#include <random>
#include <string>
#include <vector>

#include "shc/cobcat/cobordism.hpp"

namespace shc::testing {

using cob::ClosedObject;
using cob::Cobordism;
using cob::Component;

// Random expression with the given number of inputs; tracks outputs and
// Euler characteristic by summing over atoms.
struct Expr {
  std::string text;
  std::size_t out = 0;
  long chi = 0;
};

inline Expr random_layer(std::size_t in, std::mt19937_64& rng) {
  Expr e;
  std::size_t left = in;
  std::vector<std::string> parts;
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  while (left > 0 || parts.empty() || pick(4) == 0) {
    int k = parts.size() > 4 ? 6 : pick(7);
    std::string atom;
    std::size_t i = 0, o = 0;
    long g = 0;
    if (k == 0 && left >= 1) atom = "cyl", i = 1, o = 1;
    else if (k == 1 && left >= 1 && e.out < 4) atom = "pants", i = 1, o = 2;
    else if (k == 2 && left >= 2) atom = "copants", i = 2, o = 1;
    else if (k == 3 && left >= 1) atom = "cap", i = 1, o = 0;
    else if (k == 4 && e.out < 3) atom = "cup", i = 0, o = 1;
    else if (k == 5) {
      i = std::min<std::size_t>(left, static_cast<std::size_t>(pick(3)));
      o = static_cast<std::size_t>(pick(3));
      g = pick(2);
      atom = "genus(" + std::to_string(g) + "; " + std::to_string(i) + ", " + std::to_string(o) + ")";
    } else if (k == 6) {
      if (left == 0) {
        if (parts.empty()) continue;
        break;
      }
      i = parts.size() > 4 ? left : std::min<std::size_t>(left, 1 + static_cast<std::size_t>(pick(2)));
      o = i;
      atom = "id(" + std::to_string(i) + ")";
    } else {
      continue;
    }
    left -= i;
    e.out += o;
    e.chi += atom.rfind("id", 0) == 0 ? 0 : 2 - 2 * g - static_cast<long>(i + o);
    parts.push_back(atom);
  }
  for (std::size_t n = 0; n < parts.size(); ++n) e.text += (n ? " | " : "") + parts[n];
  if (parts.size() > 1 && pick(2)) e.text = "(" + e.text + ")";
  return e;
}

inline Expr random_expression(std::size_t in, int depth, std::mt19937_64& rng) {
  Expr e = random_layer(in, rng);
  for (int d = 0; d < depth; ++d) {
    Expr next = random_layer(e.out, rng);
    e.text = "(" + e.text + ") ; " + next.text;
    e.out = next.out;
    e.chi += next.chi;
  }
  return e;
}

inline Cobordism random_normal_form(std::mt19937_64& rng, std::size_t max_circles = 3) {
  std::size_t n = rng() % (max_circles + 1), m = rng() % (max_circles + 1);
  std::size_t slots = 1 + rng() % (n + m + 1);
  std::vector<Component> comps(slots);
  for (std::size_t k = 0; k < n; ++k) comps[rng() % slots].inputs.push_back(k);
  for (std::size_t k = 0; k < m; ++k) comps[rng() % slots].outputs.push_back(k);
  std::vector<Component> kept;
  for (auto& c : comps) {
    c.genus = static_cast<int>(rng() % 3);
    if (!c.closed() || rng() % 4 == 0) kept.push_back(c);
  }
  return Cobordism(ClosedObject::circles(n), ClosedObject::circles(m), kept);
}

inline std::vector<Cobordism> generator_set() {
  std::vector<Cobordism> base{Cobordism::cyl(), Cobordism::cap(), Cobordism::cup(), Cobordism::pants(),
                              Cobordism::copants(), Cobordism::surface(1, 1, 1)};
  std::vector<Cobordism> set = base;
  for (const auto& a : base)
    for (const auto& b : base) {
      Cobordism t = tensor(a, b);
      if (t.source().size() <= 3 && t.target().size() <= 3) set.push_back(t);
    }
  for (std::size_t n = 0; n <= 3; ++n) set.push_back(Cobordism::identity(ClosedObject::circles(n)));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) set.push_back(random_normal_form(rng));
  return set;
}

inline bool composable(const Cobordism& a, const Cobordism& b) { return a.target() == b.source(); }

}  // namespace shc::testing
