#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qnb/anf.hpp"
#include "qnb/block_map.hpp"
#include "qnb/cellspace.hpp"
#include "qnb/error.hpp"
#include "helpers.hpp"

using namespace qnb;

namespace {

using namespace qnb::testing;

LocalRule shift_rule() { return LocalRule{1, {{{{1, 0}}}}}; }

}  // namespace

TEST_CASE("cell spaces") {
  auto ab = CellSpace::make({{"a", 2}, {"b", 2}});
  CHECK(ab->total_dim() == 4);
  CHECK(kind_of([] { CellSpace::make({{"a", 2}, {"a", 3}}); }) == ErrorKind::DuplicateSite);
  CHECK(kind_of([] { CellSpace::make({{"a", 0}}); }) == ErrorKind::InvalidAlphabet);
  CHECK(CellSpace::ring(6, 4)->total_dim() == 4096);

  auto big = CellSpace::ring(40, 2);
  CHECK_FALSE(big->enumerable());
  CHECK(kind_of([&] { big->require_enumerable("test"); }) == ErrorKind::DimensionCapExceeded);
  CHECK_FALSE(CellSpace::ring(80, 2)->total_dim().has_value());
}

TEST_CASE("mixed-radix encoding round-trips") {
  auto space = CellSpace::make({{"x", 3}, {"y", 2}, {"z", 5}});
  for (std::uint64_t i = 0; i < 30; ++i) CHECK(space->encode(space->decode(i)) == i);
  std::vector<Letter> w{2, 1, 4};
  CHECK(space->encode(w) == 2 + 3 * 1 + 6 * 4);
}

TEST_CASE("restriction is coherent for nested subsets") {
  auto space = CellSpace::make({{"a", 3}, {"b", 2}, {"c", 4}, {"d", 2}});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = Word::from_index(space, rng() % *space->total_dim());
    SiteSet s(space), t(space);
    for (Site x = 0; x < 4; ++x) {
      if (rng() & 1U) {
        s.insert(x);
        if (rng() & 1U) t.insert(x);
      }
    }
    CHECK(w.restrict_to(s).restrict_to(t) == w.restrict_to(t));
  }
}

TEST_CASE("ring arcs") {
  auto ring = CellSpace::ring(8, 2);
  CHECK(ring_interval(ring, -2, -1).arc() == Interval{-2, -1});
  CHECK(ring_interval(ring, 0, 7).arc() == Interval{0, 7});
  CHECK(ring_interval(ring, 3, 5).arc_relative_to(4) == Interval{-1, 1});
  SiteSet split(ring);
  split.insert(0);
  split.insert(4);
  CHECK_FALSE(split.arc().has_value());
  CHECK_FALSE(SiteSet(ring).arc().has_value());
}

TEST_CASE("anf normal form") {
  auto x = Anf::var(0), y = Anf::var(1);
  CHECK((x + x).is_zero());
  CHECK((x * (y + Anf::one())).terms().size() == 2);
  CHECK((x * y).derivative(0) == y);
  std::vector<std::uint8_t> and_table{0, 0, 0, 1};
  std::vector<Var> vars{0, 1};
  CHECK(Anf::from_truth_table(and_table, vars) == x * y);
  // x0 x1 + x1 with x0 := x1, x1 := x0 + 1 gives x1 (x0 + 1) + x0 + 1
  auto f = x * y + y;
  std::vector<Anf> images{y, x + Anf::one()};
  CHECK(f.substitute(images) == x * y + x + y + Anf::one());
  auto g = x * y + x + y;
  auto m = g.satisfying_assignment();
  REQUIRE(m.has_value());
  std::vector<std::uint64_t> bits{0};
  for (Var v : *m) set_bit(bits, v, true);
  CHECK(g.evaluate(bits));
}

TEST_CASE("explicit maps") {
  auto space = binary_sites(2);
  CHECK(identity_map(space).is_explicit());
  CHECK(kind_of([&] { make_explicit_map(space, space, {0, 0, 2, 3}); }) == ErrorKind::NotInjective);
  CHECK(kind_of([&] { make_explicit_map(space, space, {0, 1, 2, 7}); }) == ErrorKind::ArityMismatch);

  // second bit XORed with the first: index = s0 + 2 s1
  std::vector<std::uint64_t> cnot(4);
  for (std::uint64_t i = 0; i < 4; ++i) cnot[i] = i ^ ((i & 1U) << 1);
  auto f = make_explicit_map(space, space, cnot);
  auto ff = compose(f, f);
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(ff.table()[i] == i);
}

TEST_CASE("inversion of random permutations") {
  std::mt19937_64 rng(3);
  auto space = binary_sites(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_permutation(space, rng);
    auto g = invert(f);
    for (std::uint64_t w = 0; w < 8; ++w) CHECK(g.table()[f.table()[w]] == w);
    CHECK(same_function(compose(g, f), identity_map(space)));
  }
  CHECK(same_function(invert(identity_map(space)), identity_map(space)));
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(5);
  auto space = CellSpace::make({{"a", 3}, {"b", 2}, {"c", 2}});
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_permutation(space, rng);
    auto g = random_permutation(space, rng);
    auto h = random_permutation(space, rng);
    CHECK(same_function(compose(h, compose(g, f)), compose(compose(h, g), f)));
  }
}

TEST_CASE("ring maps") {
  auto shift = make_ring_map(8, shift_rule(), std::nullopt, {"shift", {}, {}});
  REQUIRE(shift.has_inverse());
  auto two = compose(shift, shift);
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(two.ring().forward[n] == Anf::var(static_cast<Var>((n + 2) % 8)));
  }
  std::vector<Letter> w{1, 0, 0, 1, 0, 0, 0, 0};
  CHECK(two.apply(w) == std::vector<Letter>{0, 1, 0, 0, 0, 0, 1, 0});
  CHECK(invert(shift).apply(shift.apply(w)) == w);

  auto table = tabulate(two);
  for (std::uint64_t i = 0; i < 256; ++i) {
    auto letters = table.domain()->decode(i);
    CHECK(table.codomain()->decode(table.table()[i]) == two.apply(letters));
  }

  auto inv = derive_inverse_rule(shift_rule(), 6);
  REQUIRE(inv.outputs.size() == 1);
  CHECK(inv.outputs[0] == LocalPoly{{{-1, 0}}});
  CHECK(kind_of([] {
          make_ring_map(6, shift_rule(), LocalRule{1, {{{{2, 0}}}}}, {"shift", {}, {}});
        }) == ErrorKind::NotInjective);
  CHECK(kind_of([] { make_ring_map(6, LocalRule{1, {{{{0, 0}, {1, 0}}}}}, std::nullopt, {}); }) ==
        ErrorKind::NotInjective);
}
