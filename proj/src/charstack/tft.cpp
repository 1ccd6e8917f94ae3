#include "shc/charstack/tft.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "shc/cobcat/parser.hpp"

namespace shc::chars {

namespace {

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

using Histogram = std::map<std::vector<Elem>, std::uint64_t>;

// Holonomies of the selected boundary words over every representation.
Histogram histogram(const FiniteGroup& g, const cob::ComponentPresentation& p, const std::vector<cob::Word>& words,
                    std::uint64_t budget) {
  RepList reps = enumerate_reps(g, p, budget);
  Histogram h;
  std::vector<Elem> key(words.size());
  for (std::size_t i = 0; i < reps.count; ++i) {
    const Elem* img = reps.flat.data() + i * reps.rank;
    for (std::size_t k = 0; k < words.size(); ++k) key[k] = eval_word(g, words[k], img);
    ++h[key];
  }
  return h;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

CorrespondenceValue tft_evaluate(const cob::Cobordism& c, const FiniteGroup& g, std::uint64_t budget) {
  if (c.dim() != 1) throw DimensionMismatch("TFT evaluation needs a 2-dimensional cobordism");
  CorrespondenceValue v;
  v.apex = cob::to_cospan(c);
  v.group = g.name();
  v.apex_count = 1;
  v.image_count = 1;
  v.legs_consistent = true;
  v.diagonal = c.source() == c.target();
  v.source_count = power(g.order(), c.source().size());
  v.target_count = power(g.order(), c.target().size());
  for (const auto& comp : v.apex.components) {
    RepList reps = enumerate_reps(g, comp, budget);
    v.component_counts.push_back(reps.count);
    v.apex_count *= reps.count;
    std::set<std::vector<Elem>> images;
    std::vector<Elem> key(comp.boundary.size());
    for (std::size_t i = 0; i < reps.count; ++i) {
      const Elem* img = reps.flat.data() + i * reps.rank;
      for (std::size_t k = 0; k < comp.boundary.size(); ++k) {
        const auto& bw = comp.boundary[k];
        key[k] = eval_word(g, bw.holonomy, img);
        Elem b = eval_word(g, bw.boundary, img);
        if (key[k] != (bw.sign > 0 ? b : g.inv(b))) v.legs_consistent = false;
      }
      for (std::size_t k = 0; k < comp.boundary.size(); ++k) {
        const auto& bw = comp.boundary[k];
        if (bw.side != cob::Side::In) continue;
        bool matched = false;
        for (std::size_t m = 0; m < comp.boundary.size(); ++m) {
          const auto& other = comp.boundary[m];
          if (other.side == cob::Side::Out && other.index == bw.index) matched = key[m] == key[k];
        }
        if (!matched) v.diagonal = false;
      }
      images.insert(key);
    }
    v.image_count *= images.size();
  }
  if (v.apex.components.empty()) v.diagonal = v.diagonal && c.source().size() == 0;
  return v;
}

GluingCertificate gluing_certificate(const cob::Cobordism& first, const cob::Cobordism& second, const FiniteGroup& g,
                                     std::uint64_t budget) {
  if (first.dim() != 1) throw DimensionMismatch("TFT evaluation needs 2-dimensional cobordisms");
  cob::Cobordism composite = cob::compose(first, second);
  GluingCertificate cert;
  cert.composite = cob::print(composite);
  cert.group = g.name();
  cert.direct_count = count_reps(g, cob::to_cospan(composite), budget);

  cob::CospanPresentation p1 = cob::to_cospan(first), p2 = cob::to_cospan(second);
  std::size_t n1 = p1.components.size(), n2 = p2.components.size();
  std::size_t middle = first.target().size();

  // Node of each middle circle on either side, and its holonomy word.
  std::vector<std::size_t> left(middle), right(middle);
  std::vector<std::vector<std::size_t>> circles_of(n1 + n2);
  for (std::size_t j = 0; j < middle; ++j) {
    std::size_t c = 0;
    p1.circle(cob::Side::Out, j, &c);
    left[j] = c;
    p2.circle(cob::Side::In, j, &c);
    right[j] = n1 + c;
    circles_of[left[j]].push_back(j);
    circles_of[right[j]].push_back(j);
  }
  auto word = [&](std::size_t node, std::size_t j) {
    return node < n1 ? p1.circle(cob::Side::Out, j).holonomy : p2.circle(cob::Side::In, j).holonomy;
  };

  // Contract components one at a time. The state is keyed by the holonomies of
  // middle circles with exactly one endpoint processed, in `open` order.
  std::map<std::vector<Elem>, std::uint64_t> state{{{}, 1}};
  std::vector<std::size_t> open;
  std::vector<bool> done(n1 + n2, false);
  UnionFind uf(n1 + n2);
  for (std::size_t node = 0; node < n1 + n2; ++node) {
    const auto& comp = node < n1 ? p1.components[node] : p2.components[node - n1];
    std::vector<cob::Word> words;
    for (std::size_t j : circles_of[node]) words.push_back(word(node, j));
    Histogram h = histogram(g, comp, words, budget);

    // For each middle circle of this node: position in `open` if it closes here.
    std::vector<long> closes(circles_of[node].size(), -1);
    std::vector<bool> tree(circles_of[node].size(), false);
    for (std::size_t k = 0; k < circles_of[node].size(); ++k) {
      std::size_t j = circles_of[node][k];
      std::size_t other = left[j] == node ? right[j] : left[j];
      if (!done[other]) continue;
      closes[k] = std::find(open.begin(), open.end(), j) - open.begin();
      tree[k] = uf.unite(node, other);
      ++(tree[k] ? cert.tree_gluings : cert.extra_gluings);
    }
    std::vector<std::size_t> next_open;
    std::vector<bool> keep_open(open.size(), true);
    for (long pos : closes)
      if (pos >= 0) keep_open[static_cast<std::size_t>(pos)] = false;
    for (std::size_t i = 0; i < open.size(); ++i)
      if (keep_open[i]) next_open.push_back(open[i]);
    for (std::size_t k = 0; k < circles_of[node].size(); ++k)
      if (closes[k] < 0) next_open.push_back(circles_of[node][k]);

    std::map<std::vector<Elem>, std::uint64_t> next;
    for (const auto& [s, cs] : state)
      for (const auto& [hol, ch] : h) {
        std::uint64_t weight = cs * ch;
        for (std::size_t k = 0; k < hol.size() && weight > 0; ++k) {
          if (closes[k] < 0) continue;
          Elem x = s[static_cast<std::size_t>(closes[k])], y = hol[k];
          weight *= tree[k] ? (x == y ? 1 : 0) : g.conjugators(x, y);
        }
        if (weight == 0) continue;
        std::vector<Elem> key;
        for (std::size_t i = 0; i < open.size(); ++i)
          if (keep_open[i]) key.push_back(s[i]);
        for (std::size_t k = 0; k < hol.size(); ++k)
          if (closes[k] < 0) key.push_back(hol[k]);
        next[key] += weight;
      }
    state = std::move(next);
    open = std::move(next_open);
    done[node] = true;
  }
  for (const auto& [s, cs] : state) cert.fiber_count += cs;
  return cert;
}

}  // namespace shc::chars
