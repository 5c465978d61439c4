#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "qnb/verify.hpp"

using namespace qnb;

TEST_CASE("corpus helpers") {
  const auto two = binary_space(2);
  const auto all = all_bijections(two);
  CHECK(all.size() == 24);
  std::set<std::vector<std::uint64_t>> distinct;
  for (const auto& f : all) distinct.insert(f.table());
  CHECK(distinct.size() == 24);
  CHECK(all_subsets(binary_space(3)).size() == 8);
}

TEST_CASE("random bijections are reproducible from the seed") {
  const auto space = binary_space(4);
  std::mt19937_64 a(7), b(7), c(8);
  const auto fa = random_bijection(space, a);
  CHECK(fa.table() == random_bijection(space, b).table());
  CHECK(fa.table() != random_bijection(space, c).table());
}

TEST_CASE("the battery lists nine criteria in order") {
  const auto& all = acceptance_criteria();
  REQUIRE(all.size() == 9);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].id == static_cast<int>(i + 1));
}
