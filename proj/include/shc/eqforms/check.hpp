#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shc/eqforms/form.hpp"

namespace shc {

enum class Execution { Serial, Parallel };

struct CheckOptions {
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  Execution execution = Execution::Parallel;
};

struct IdentityReport {
  std::string name;
  bool holds = true;
  std::size_t points = 0;
  std::size_t evaluations = 0;
  std::string counterexample;
};

// Evaluation arguments for a sample: point, Lie element, tangent basis.
struct SampleArgs {
  QVec point;
  QVec x;
  std::vector<QVec> tangent;
};

std::vector<SampleArgs> make_samples(const GSpace& space, const CheckOptions& opt);
std::vector<SampleArgs> make_samples_at(const GSpace& space, std::vector<QVec> points, std::uint64_t seed);

// Increasing index tuples of length p drawn from 0..n-1.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t p);

// f vanishes on every increasing tuple of tangent basis vectors at every sample.
IdentityReport check_vanishes(const EquivariantForm& f, const CheckOptions& opt, std::string name);
IdentityReport check_equal(const EquivariantForm& a, const EquivariantForm& b, const CheckOptions& opt,
                           std::string name);

// Same, with samples supplied by the caller.
IdentityReport check_vanishes_on(const EquivariantForm& f, const std::vector<SampleArgs>& samples,
                                 Execution execution, std::string name);

}  // namespace shc
