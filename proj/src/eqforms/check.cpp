#include "shc/eqforms/check.hpp"

#include <omp.h>

#include <random>
#include <sstream>

#include "shc/liecore/sampling.hpp"

namespace shc {

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = p;
    while (i > 0 && t[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < p; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::vector<SampleArgs> make_samples(const GSpace& space, const CheckOptions& opt) {
  return make_samples_at(space, space.sample_points(opt.samples, opt.seed), opt.seed);
}

std::vector<SampleArgs> make_samples_at(const GSpace& space, std::vector<QVec> points, std::uint64_t seed) {
  std::vector<SampleArgs> out;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (auto& pt : points) {
    SampleArgs a;
    a.x = random_lie_coords(*space.group(), rng);
    a.tangent = space.tangent_basis(pt);
    a.point = std::move(pt);
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

struct PointResult {
  std::size_t evaluations = 0;
  std::string counterexample;
};

PointResult check_point(const EquivariantForm& f, const SampleArgs& s) {
  PointResult r;
  auto tuples = increasing_tuples(s.tangent.size(), static_cast<std::size_t>(f.form_degree()));
  JVec x = lift(s.x), pt = lift(s.point);
  for (const auto& t : tuples) {
    std::vector<JVec> vs;
    for (auto i : t) vs.push_back(lift(s.tangent[i]));
    Rational val = f.eval_raw(x, pt, vs).value();
    ++r.evaluations;
    if (!val.is_zero()) {
      std::ostringstream os;
      os << "value " << val << " on tangent tuple (";
      for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
      os << ")";
      r.counterexample = os.str();
      return r;
    }
  }
  return r;
}

}  // namespace

IdentityReport check_vanishes_on(const EquivariantForm& f, const std::vector<SampleArgs>& samples,
                                 Execution execution, std::string name) {
  std::vector<PointResult> results(samples.size());
  std::vector<std::string> errors(samples.size());
  const long n = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic) if (execution == Execution::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = check_point(f, samples[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  IdentityReport rep;
  rep.name = std::move(name);
  rep.points = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!errors[i].empty()) throw Error("evaluating " + f.label() + ": " + errors[i]);
    rep.evaluations += results[i].evaluations;
    if (rep.holds && !results[i].counterexample.empty()) {
      rep.holds = false;
      rep.counterexample = "sample " + std::to_string(i) + ": " + results[i].counterexample;
    }
  }
  return rep;
}

IdentityReport check_vanishes(const EquivariantForm& f, const CheckOptions& opt, std::string name) {
  return check_vanishes_on(f, make_samples(*f.space(), opt), opt.execution, std::move(name));
}

IdentityReport check_equal(const EquivariantForm& a, const EquivariantForm& b, const CheckOptions& opt,
                           std::string name) {
  return check_vanishes(a - b, opt, std::move(name));
}

}  // namespace shc
