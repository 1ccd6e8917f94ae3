#include "shc/charstack/enumerate.hpp"

namespace shc::chars {

namespace {

bool relators_hold(const FiniteGroup& g, const std::vector<cob::Word>& rels, const Elem* images) {
  for (const auto& r : rels)
    if (eval_word(g, r, images) != g.identity()) return false;
  return true;
}

// Visit every tuple whose first image is fixed to `first`.
void sweep(const FiniteGroup& g, const cob::ComponentPresentation& p, Elem first, bool keep, std::uint64_t& count,
           std::vector<Elem>& out) {
  std::size_t r = p.rank();
  std::vector<Elem> img(r, 0);
  img[0] = first;
  const Elem n = static_cast<Elem>(g.order());
  while (true) {
    if (relators_hold(g, p.relators, img.data())) {
      ++count;
      if (keep) out.insert(out.end(), img.begin(), img.end());
    }
    std::size_t k = r;
    while (k > 1) {
      --k;
      if (++img[k] < n) break;
      img[k] = 0;
      if (k == 1) return;
    }
    if (r == 1) return;
  }
}

}  // namespace

Elem eval_word(const FiniteGroup& g, const cob::Word& w, const Elem* images) {
  Elem x = g.identity();
  for (int l : w.letters()) x = g.mul(x, l > 0 ? images[l - 1] : g.inv(images[-l - 1]));
  return x;
}

std::uint64_t search_size(const FiniteGroup& g, std::size_t rank, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (total > budget / g.order()) throw BudgetExceeded("|G|^" + std::to_string(rank) + " exceeds the budget");
    total *= g.order();
  }
  if (total > budget) throw BudgetExceeded("search space exceeds the budget");
  return total;
}

RepList enumerate_reps_serial(const FiniteGroup& g, const cob::ComponentPresentation& p, std::uint64_t budget,
                              bool keep) {
  search_size(g, p.rank(), budget);
  RepList out{p.rank(), 0, {}};
  if (p.rank() == 0) {
    out.count = relators_hold(g, p.relators, nullptr) ? 1 : 0;
    return out;
  }
  for (Elem first = 0; first < g.order(); ++first) sweep(g, p, first, keep, out.count, out.flat);
  return out;
}

RepList enumerate_reps(const FiniteGroup& g, const cob::ComponentPresentation& p, std::uint64_t budget, bool keep) {
  search_size(g, p.rank(), budget);
  if (p.rank() == 0) return enumerate_reps_serial(g, p, budget, keep);
  const long n = static_cast<long>(g.order());
  std::vector<std::vector<Elem>> buckets(g.order());
  std::vector<std::uint64_t> counts(g.order(), 0);
#pragma omp parallel for schedule(dynamic)
  for (long first = 0; first < n; ++first)
    sweep(g, p, static_cast<Elem>(first), keep, counts[static_cast<std::size_t>(first)],
          buckets[static_cast<std::size_t>(first)]);
  RepList out{p.rank(), 0, {}};
  for (std::size_t i = 0; i < g.order(); ++i) {
    out.count += counts[i];
    out.flat.insert(out.flat.end(), buckets[i].begin(), buckets[i].end());
  }
  return out;
}

std::uint64_t count_reps(const FiniteGroup& g, const cob::CospanPresentation& p, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (const auto& c : p.components) total *= enumerate_reps(g, c, budget, false).count;
  return total;
}

std::uint64_t commuting_pairs(const FiniteGroup& g) {
  std::uint64_t n = 0;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) n += g.mul(a, b) == g.mul(b, a);
  return n;
}

}  // namespace shc::chars
