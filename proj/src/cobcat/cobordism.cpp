#include "shc/cobcat/cobordism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace shc::cob {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::tuple<int, std::size_t> sort_key(const Component& c) {
  if (!c.inputs.empty()) return {0, c.inputs.front()};
  if (!c.outputs.empty()) return {1, c.outputs.front()};
  return {2, static_cast<std::size_t>(c.genus)};
}

std::vector<std::size_t> owners(const std::vector<Component>& comps, std::size_t n, bool outputs) {
  std::vector<std::size_t> own(n);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (auto k : outputs ? comps[i].outputs : comps[i].inputs) own[k] = i;
  return own;
}

struct Accum {
  long chi = 0;
  long glued = 0;
  Component comp;
};

Component finish(const Accum& a, int dim) {
  Component c = a.comp;
  long b = static_cast<long>(c.boundary_count());
  if (dim == 0) {
    long chi = a.chi - a.glued;
    if (!((b == 2 && chi == 1) || (b == 0 && chi == 0))) throw MalformedCobordism("1-manifold gluing left a non-interval");
    c.genus = 0;
    return c;
  }
  long twice = 2 - a.chi - b;
  if (twice < 0 || twice % 2) throw MalformedCobordism("inconsistent Euler characteristic");
  c.genus = static_cast<int>(twice / 2);
  return c;
}

}  // namespace

ClosedObject ClosedObject::circles(std::size_t n, int dim) { return ClosedObject{dim, std::vector<int>(n, 1)}; }

ClosedObject ClosedObject::operator+(const ClosedObject& other) const {
  if (dim != other.dim) throw ArityMismatch("objects of different dimension");
  ClosedObject out = *this;
  out.orientation.insert(out.orientation.end(), other.orientation.begin(), other.orientation.end());
  return out;
}

Cobordism::Cobordism(ClosedObject source, ClosedObject target, std::vector<Component> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.dim != target_.dim || source_.dim < 0 || source_.dim > 1)
    throw MalformedCobordism("boundary objects must both be points or both circles");
  for (const auto* obj : {&source_, &target_})
    for (int o : obj->orientation)
      if (o != 1 && o != -1) throw MalformedCobordism("orientation signs must be +1 or -1");
  std::vector<int> seen_in(source_.size()), seen_out(target_.size());
  for (auto& c : components_) {
    if (c.genus < 0) throw MalformedCobordism("negative genus");
    std::sort(c.inputs.begin(), c.inputs.end());
    std::sort(c.outputs.begin(), c.outputs.end());
    for (auto k : c.inputs) {
      if (k >= source_.size()) throw MalformedCobordism("input circle out of range");
      ++seen_in[k];
    }
    for (auto k : c.outputs) {
      if (k >= target_.size()) throw MalformedCobordism("output circle out of range");
      ++seen_out[k];
    }
    if (dim() == 0) {
      if (c.genus != 0 || (c.boundary_count() != 0 && c.boundary_count() != 2))
        throw MalformedCobordism("1-dimensional components are intervals or circles");
      int total = 0;
      for (auto k : c.inputs) total -= source_.orientation[k];
      for (auto k : c.outputs) total += target_.orientation[k];
      if (total != 0) throw NonOrientableGluing("interval endpoints have incompatible orientations");
    }
  }
  for (int s : seen_in)
    if (s != 1) throw MalformedCobordism("components must partition the input circles");
  for (int s : seen_out)
    if (s != 1) throw MalformedCobordism("components must partition the output circles");
  std::sort(components_.begin(), components_.end(),
            [](const Component& a, const Component& b) { return sort_key(a) < sort_key(b); });
}

Cobordism Cobordism::identity(const ClosedObject& object) {
  std::vector<Component> comps;
  for (std::size_t k = 0; k < object.size(); ++k) comps.push_back({0, {k}, {k}});
  return Cobordism(object, object, comps);
}

Cobordism Cobordism::surface(int genus, std::size_t in, std::size_t out) {
  Component c{genus, {}, {}};
  for (std::size_t k = 0; k < in; ++k) c.inputs.push_back(k);
  for (std::size_t k = 0; k < out; ++k) c.outputs.push_back(k);
  return Cobordism(ClosedObject::circles(in), ClosedObject::circles(out), {c});
}

Cobordism Cobordism::interval() { return identity(ClosedObject::circles(1, 0)); }

long Cobordism::euler_characteristic(const Component& c) const {
  if (dim() == 0) return c.closed() ? 0 : 1;
  return 2 - 2L * c.genus - static_cast<long>(c.boundary_count());
}

long Cobordism::euler_characteristic() const {
  long chi = 0;
  for (const auto& c : components_) chi += euler_characteristic(c);
  return chi;
}

Cobordism compose(const Cobordism& first, const Cobordism& second) {
  if (first.dim() != second.dim() || first.target().size() != second.source().size())
    throw ArityMismatch("cannot glue " + std::to_string(first.target().size()) + " outgoing onto " +
                        std::to_string(second.source().size()) + " incoming");
  if (first.target().orientation != second.source().orientation)
    throw NonOrientableGluing("glued boundary orientations disagree");
  const auto& c1 = first.components();
  const auto& c2 = second.components();
  std::size_t n1 = c1.size(), mid = first.target().size();
  UnionFind uf(n1 + c2.size());
  auto out_owner = owners(c1, mid, true);
  auto in_owner = owners(c2, mid, false);
  for (std::size_t k = 0; k < mid; ++k) uf.unite(out_owner[k], n1 + in_owner[k]);

  std::map<std::size_t, Accum> groups;
  for (std::size_t i = 0; i < n1; ++i) {
    auto& a = groups[uf.find(i)];
    a.chi += first.euler_characteristic(c1[i]);
    a.comp.inputs.insert(a.comp.inputs.end(), c1[i].inputs.begin(), c1[i].inputs.end());
  }
  for (std::size_t i = 0; i < c2.size(); ++i) {
    auto& a = groups[uf.find(n1 + i)];
    a.chi += second.euler_characteristic(c2[i]);
    a.comp.outputs.insert(a.comp.outputs.end(), c2[i].outputs.begin(), c2[i].outputs.end());
  }
  for (std::size_t k = 0; k < mid; ++k) ++groups[uf.find(out_owner[k])].glued;
  std::vector<Component> comps;
  for (const auto& [root, a] : groups) comps.push_back(finish(a, first.dim()));
  return Cobordism(first.source(), second.target(), comps);
}

Cobordism tensor(const Cobordism& a, const Cobordism& b) {
  std::vector<Component> comps = a.components();
  std::size_t si = a.source().size(), so = a.target().size();
  for (auto c : b.components()) {
    for (auto& k : c.inputs) k += si;
    for (auto& k : c.outputs) k += so;
    comps.push_back(c);
  }
  return Cobordism(a.source() + b.source(), a.target() + b.target(), comps);
}

Cobordism trace(const Cobordism& c, std::size_t i, std::size_t j) {
  const auto& tgt = c.target();
  if (i == j || i >= tgt.size() || j >= tgt.size()) throw ArityMismatch("trace needs two distinct output circles");
  if (c.dim() == 0 && tgt.orientation[i] != -tgt.orientation[j])
    throw NonOrientableGluing("points glued to each other must have opposite orientations");
  const auto& comps = c.components();
  UnionFind uf(comps.size());
  auto own = owners(comps, tgt.size(), true);
  uf.unite(own[i], own[j]);
  auto renumber = [&](std::size_t k) { return k - (k > i) - (k > j); };
  std::map<std::size_t, Accum> groups;
  for (std::size_t n = 0; n < comps.size(); ++n) {
    auto& a = groups[uf.find(n)];
    a.chi += c.euler_characteristic(comps[n]);
    a.comp.inputs.insert(a.comp.inputs.end(), comps[n].inputs.begin(), comps[n].inputs.end());
    for (auto k : comps[n].outputs)
      if (k != i && k != j) a.comp.outputs.push_back(renumber(k));
  }
  ++groups[uf.find(own[i])].glued;
  std::vector<Component> out;
  for (const auto& [root, a] : groups) out.push_back(finish(a, c.dim()));
  ClosedObject target = tgt;
  target.orientation.erase(target.orientation.begin() + static_cast<long>(std::max(i, j)));
  target.orientation.erase(target.orientation.begin() + static_cast<long>(std::min(i, j)));
  return Cobordism(c.source(), target, out);
}

Cobordism reverse_circle(const Cobordism& c, Side side, std::size_t index) {
  ClosedObject s = c.source(), t = c.target();
  auto& o = side == Side::In ? s.orientation : t.orientation;
  if (index >= o.size()) throw ArityMismatch("no such boundary circle");
  o[index] = -o[index];
  return Cobordism(s, t, c.components());
}

int OrientationReport::sign(Side side, std::size_t index) const {
  for (const auto& s : signs)
    if (s.side == side && s.index == index) return s.sign;
  throw ArityMismatch("no such boundary circle");
}

OrientationReport relative_orientation(const Cobordism& c) {
  OrientationReport r;
  const auto& comps = c.components();
  auto in_owner = owners(comps, c.source().size(), false);
  auto out_owner = owners(comps, c.target().size(), true);
  for (std::size_t k = 0; k < c.source().size(); ++k)
    r.signs.push_back({Side::In, k, in_owner[k], -c.source().orientation[k]});
  for (std::size_t k = 0; k < c.target().size(); ++k)
    r.signs.push_back({Side::Out, k, out_owner[k], c.target().orientation[k]});
  return r;
}

OrientationReport composite_orientation(const Cobordism& first, const Cobordism& second) {
  Cobordism whole = compose(first, second);
  auto r1 = relative_orientation(first), r2 = relative_orientation(second), r = relative_orientation(whole);
  for (std::size_t k = 0; k < first.target().size(); ++k)
    if (r1.sign(Side::Out, k) + r2.sign(Side::In, k) != 0)
      throw NonOrientableGluing("glued circle " + std::to_string(k) + " does not cancel");
  for (std::size_t k = 0; k < whole.source().size(); ++k)
    if (r.sign(Side::In, k) != r1.sign(Side::In, k)) throw NonOrientableGluing("input sign changed by gluing");
  for (std::size_t k = 0; k < whole.target().size(); ++k)
    if (r.sign(Side::Out, k) != r2.sign(Side::Out, k)) throw NonOrientableGluing("output sign changed by gluing");
  return r;
}

std::string side_name(Side s) { return s == Side::In ? "in" : "out"; }

}  // namespace shc::cob
