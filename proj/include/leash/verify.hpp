#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leash/action.hpp"

namespace leash {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_counterexample;  // empty when passing
  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::vector<std::string> suites;  // empty runs everything, in canonical order
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool all_passed = true;
};

// The canonical suite order.
const std::vector<std::string>& suite_names();

// Runs the requested suites with deterministic seeding. Unknown suite names
// throw InvalidParams.
VerifyReport run_verify(const VerifyOptions& options);

// Deterministic fixture builders shared by the suites and the test harness.
Action random_z_action(const DyadicSpace& space, std::uint64_t seed);
// model must be H(2); sharing one model instance shares its norm cache.
Action random_h2_action(GroupModelPtr model, const DyadicSpace& space, std::uint64_t seed);
// The order-12 permutation (0 1 2)(3 4 5 6) at resolution 3.
Transformation order12_fixture(const DyadicSpace& space);

}  // namespace leash
