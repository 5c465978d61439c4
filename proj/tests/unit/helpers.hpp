#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "qnb/block_map.hpp"
#include "qnb/error.hpp"

namespace qnb::testing {

inline ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

inline SpacePtr binary_sites(std::size_t n) {
  std::vector<SiteSpec> specs;
  for (std::size_t i = 0; i < n; ++i) specs.push_back({"s" + std::to_string(i), 2});
  return CellSpace::make(specs);
}

inline BlockMap random_permutation(const SpacePtr& space, std::mt19937_64& rng) {
  std::vector<std::uint64_t> table(*space->total_dim());
  std::iota(table.begin(), table.end(), 0);
  std::shuffle(table.begin(), table.end(), rng);
  return make_explicit_map(space, space, table);
}

inline SiteSet random_subset(const SpacePtr& space, std::mt19937_64& rng) {
  SiteSet s(space);
  for (Site x = 0; x < space->size(); ++x) {
    if (rng() & 1U) s.insert(x);
  }
  return s;
}

inline SiteSet sites(const SpacePtr& space, std::initializer_list<Site> members) {
  SiteSet s(space);
  for (Site x : members) s.insert(x);
  return s;
}

}  // namespace qnb::testing
