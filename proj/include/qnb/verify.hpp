#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qnb/block_map.hpp"

namespace qnb {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;    // individual comparisons made
  std::size_t failures = 0;  // comparisons that came out wrong
  std::vector<std::string> details;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

// The acceptance battery, in order. Randomized criteria draw from a
// generator seeded with the given seed.
const std::vector<Criterion>& acceptance_criteria();
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_done = {});

// Corpus helpers, shared with the tests.
SpacePtr binary_space(std::size_t sites);
// Uniform bijection of the space's words (Fisher-Yates on rng() % (i+1), so
// the sequence is the same on every platform).
BlockMap random_bijection(const SpacePtr& space, std::mt19937_64& rng);
// All bijections of the space's words, in lexicographic table order.
std::vector<BlockMap> all_bijections(const SpacePtr& space);
// Every subset of the space's sites.
std::vector<SiteSet> all_subsets(const SpacePtr& space);

}  // namespace qnb
