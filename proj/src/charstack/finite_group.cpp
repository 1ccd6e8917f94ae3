#include "shc/charstack/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shc::chars {

namespace {

std::vector<long> matmul(const std::vector<long>& a, const std::vector<long>& b, std::uint32_t p) {
  std::size_t n = 0;
  while (n * n < a.size()) ++n;
  std::vector<long> c(a.size(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % p;
  return c;
}

// Permutations compose as (a b)(i) = a(b(i)).
std::vector<long> permmul(const std::vector<long>& a, const std::vector<long>& b, std::uint32_t) {
  std::vector<long> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

std::vector<long> addmod(const std::vector<long>& a, const std::vector<long>& b, std::uint32_t n) {
  return {(a[0] + b[0]) % static_cast<long>(n)};
}

bool even(const std::vector<long>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 == 0;
}

}  // namespace

void FiniteGroup::finish(std::vector<std::vector<long>> elems, const std::vector<long>& one,
                         std::vector<long> (*product)(const std::vector<long>&, const std::vector<long>&,
                                                      std::uint32_t)) {
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<long>, Elem> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  std::size_t n = elems.size();
  table_.assign(n * n, 0);
  inv_.assign(n, 0);
  identity_ = index.at(one);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem c = index.at(product(elems[a], elems[b], modulus_));
      table_[a * n + b] = c;
      if (c == identity_) inv_[a] = static_cast<Elem>(b);
    }
  if (degree_ > 0) matrices_ = std::move(elems);
}

FiniteGroup FiniteGroup::special_linear_2(std::uint32_t p) {
  if (!is_prime(p)) throw Error("SL2 needs a prime modulus");
  FiniteGroup g;
  g.name_ = "SL2(F" + std::to_string(p) + ")";
  g.modulus_ = p;
  g.degree_ = 2;
  g.traceless_ = true;
  std::vector<std::vector<long>> elems;
  long q = p;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        for (long d = 0; d < q; ++d)
          if (((a * d - b * c) % q + q) % q == 1) elems.push_back({a, b, c, d});
  g.finish(std::move(elems), {1, 0, 0, 1}, matmul);
  return g;
}

FiniteGroup FiniteGroup::general_linear_1(std::uint32_t p) {
  if (!is_prime(p)) throw Error("GL1 needs a prime modulus");
  FiniteGroup g;
  g.name_ = "GL1(F" + std::to_string(p) + ")";
  g.modulus_ = p;
  g.degree_ = 1;
  std::vector<std::vector<long>> elems;
  for (long a = 1; a < static_cast<long>(p); ++a) elems.push_back({a});
  g.finish(std::move(elems), {1}, matmul);
  return g;
}

FiniteGroup FiniteGroup::symmetric(unsigned n) {
  FiniteGroup g;
  g.name_ = "S" + std::to_string(n);
  std::vector<long> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<long>> elems;
  do elems.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::iota(perm.begin(), perm.end(), 0);
  g.finish(std::move(elems), perm, permmul);
  return g;
}

FiniteGroup FiniteGroup::alternating(unsigned n) {
  FiniteGroup g;
  g.name_ = "A" + std::to_string(n);
  std::vector<long> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<long>> elems;
  do
    if (even(perm)) elems.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::iota(perm.begin(), perm.end(), 0);
  g.finish(std::move(elems), perm, permmul);
  return g;
}

FiniteGroup FiniteGroup::cyclic(unsigned n) {
  FiniteGroup g;
  g.name_ = "C" + std::to_string(n);
  g.modulus_ = n;
  std::vector<std::vector<long>> elems;
  for (long a = 0; a < static_cast<long>(n); ++a) elems.push_back({a});
  g.finish(std::move(elems), {0}, addmod);
  return g;
}

Matrix<Fp> FiniteGroup::matrix(Elem a) const {
  if (!has_matrices()) throw Error(name_ + " has no matrix realization");
  std::vector<Fp> entries;
  for (long x : matrices_.at(a)) entries.emplace_back(x, modulus_);
  return Matrix<Fp>::from_rows(degree_, degree_, entries);
}

FiniteGroup::Elem FiniteGroup::index_of(const Matrix<Fp>& m) const {
  std::vector<long> key;
  for (const auto& x : m.data()) key.push_back(((x.value() % static_cast<long>(modulus_)) + modulus_) % modulus_);
  auto it = std::lower_bound(matrices_.begin(), matrices_.end(), key);
  if (it == matrices_.end() || *it != key) throw Error("matrix is not an element of " + name_);
  return static_cast<Elem>(it - matrices_.begin());
}

std::size_t FiniteGroup::conjugators(Elem a, Elem b) const {
  std::size_t n = 0;
  for (Elem t = 0; t < order(); ++t) n += mul(mul(t, a), inv(t)) == b;
  return n;
}

std::size_t FiniteGroup::conjugacy_class_count() const {
  std::vector<bool> seen(order(), false);
  std::size_t classes = 0;
  for (Elem a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    ++classes;
    for (Elem t = 0; t < order(); ++t) seen[mul(mul(t, a), inv(t))] = true;
  }
  return classes;
}

}  // namespace shc::chars
