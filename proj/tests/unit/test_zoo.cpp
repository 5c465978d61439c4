#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qnb/nbhd.hpp"
#include "qnb/zoo.hpp"

using namespace qnb;
using namespace qnb::testing;

namespace {

// Letter-level reference evaluators written straight from the rule formulas.
struct Cells {
  std::vector<Letter> v;
  unsigned bit(long cell, unsigned b) const {
    const long n = static_cast<long>(v.size());
    return (v[static_cast<std::size_t>(((cell % n) + n) % n)] >> b) & 1U;
  }
};

std::vector<Letter> reference_jk(const std::vector<Letter>& v, unsigned k) {
  const Cells c{v};
  std::vector<Letter> out(v.size(), 0);
  for (long n = 0; n < static_cast<long>(v.size()); ++n) {
    for (unsigned i = 1; i <= k; ++i) {
      const unsigned value = i < k ? c.bit(n, i - 1) ^ c.bit(n + 1, i) : c.bit(n + 1, 0);
      out[n] |= value << (i - 1);
    }
  }
  return out;
}

// Bits (b0, b1) of T_l copy q at `cell`, reading bits `base`.. of each cell.
std::pair<unsigned, unsigned> reference_t_copy(const Cells& c, long cell, unsigned q, unsigned base) {
  const unsigned b0 = base + 2 * (q - 1);
  const unsigned x = c.bit(cell, b0 + 1) ^ (c.bit(cell, b0) & c.bit(cell + q, b0));
  return {x, c.bit(cell + q, b0)};
}

std::vector<Letter> reference_tk(const std::vector<Letter>& v, unsigned k) {
  const Cells c{v};
  std::vector<Letter> out(v.size(), 0);
  for (long n = 0; n < static_cast<long>(v.size()); ++n) {
    for (unsigned q = 1; q <= k; ++q) {
      auto [x, y] = reference_t_copy(c, n, q, 0);
      out[n] |= (x << (2 * q - 2)) | (y << (2 * q - 1));
    }
  }
  return out;
}

std::vector<Letter> reference_jt(const std::vector<Letter>& v, unsigned k, unsigned l) {
  const Cells c{v};
  const unsigned w = 2 * l;
  std::vector<Letter> out(v.size(), 0);
  for (long n = 0; n < static_cast<long>(v.size()); ++n) {
    for (unsigned i = 1; i < k; ++i) {
      for (unsigned p = 0; p < w; ++p) {
        out[n] |= (c.bit(n, (i - 1) * w + p) ^ c.bit(n + 1, i * w + p)) << ((i - 1) * w + p);
      }
    }
    for (unsigned q = 1; q <= l; ++q) {
      auto [x, y] = reference_t_copy(c, n + 1, q, 0);
      out[n] |= (x << ((k - 1) * w + 2 * q - 2)) | (y << ((k - 1) * w + 2 * q - 1));
    }
  }
  return out;
}

std::vector<Letter> random_letters(const BlockMap& f, std::mt19937_64& rng) {
  std::vector<Letter> v(f.domain()->size());
  for (auto& a : v) a = static_cast<Letter>(rng() % f.domain()->alphabet_size(0));
  return v;
}

void check_round_trip(const BlockMap& f, std::mt19937_64& rng) {
  for (int t = 0; t < 50; ++t) {
    const auto v = random_letters(f, rng);
    CHECK(f.apply_inverse(f.apply(v)) == v);
  }
}

}  // namespace

TEST_CASE("zoo maps follow their letter-level formulas") {
  std::mt19937_64 rng(31);
  for (unsigned k : {2U, 3U}) {
    const auto f = make_jk(k, default_ring_jk(k));
    for (int t = 0; t < 50; ++t) {
      const auto v = random_letters(f, rng);
      CHECK(f.apply(v) == reference_jk(v, k));
    }
    check_round_trip(f, rng);
  }
  for (unsigned k : {1U, 2U, 3U}) {
    const auto f = make_tk(k, default_ring_tk(k));
    for (int t = 0; t < 50; ++t) {
      const auto v = random_letters(f, rng);
      CHECK(f.apply(v) == reference_tk(v, k));
    }
    check_round_trip(f, rng);
  }
  for (auto [k, l] : {std::pair{2U, 1U}, std::pair{3U, 1U}, std::pair{2U, 2U}}) {
    const auto f = make_jt(k, l, default_ring_jt(k, l));
    for (int t = 0; t < 30; ++t) {
      const auto v = random_letters(f, rng);
      CHECK(f.apply(v) == reference_jt(v, k, l));
    }
    check_round_trip(f, rng);
  }
}

TEST_CASE("T_1 is the Toffoli automaton") {
  CHECK(same_function(make_tk(1, 9), make_toffoli(9)));
}

TEST_CASE("declared inverses compose to the identity") {
  const auto f = make_jk(3, 9);
  CHECK(same_function(compose(invert(f), f), identity_map(f.domain())));
  const auto g = make_ring_map(9, kk_rule(3), jk_rule(3), {"kk", {}, {}});
  CHECK(same_function(g, invert(f)));
}

TEST_CASE("JT built directly equals the composed construction") {
  for (auto [k, l] : {std::pair{2U, 1U}, std::pair{3U, 1U}}) {
    const auto ring = default_ring_jt(k, l);
    CHECK(same_function(make_jt(k, l, ring), make_jt_iterated(k, l, 1, ring)));
  }
}

TEST_CASE("classical neighbourhoods of the zoo") {
  for (unsigned k : {2U, 3U}) {
    const auto f = make_jk(k, default_ring_jk(k));
    CHECK(in_nbhd(f, 0).arc() == Interval{0, 1});
    CHECK(in_nbhd(invert(f), 0).arc() == Interval{-static_cast<long>(k), -1});
  }
  const auto t = make_toffoli(default_ring_toffoli());
  CHECK(in_nbhd(t, 0).arc() == Interval{0, 1});
  CHECK(in_nbhd(invert(t), 0).arc() == Interval{-1, 0});

  const auto t2 = make_tk(2, default_ring_tk(2));
  CHECK(in_nbhd(t2, 0).arc() == Interval{0, 2});
  CHECK(in_nbhd(invert(t2), 0).arc() == Interval{-2, 0});

  const auto jt = make_jt(2, 1, default_ring_jt(2, 1));
  CHECK(in_nbhd(jt, 0).arc() == Interval{0, 2});
  CHECK(in_nbhd(invert(jt), 0).arc() == Interval{-3, -1});
}

TEST_CASE("zoo rings below the minimum are refused") {
  CHECK(kind_of([] { make_jk(2, 5); }) == ErrorKind::RingTooSmall);
  CHECK(kind_of([] { make_toffoli(5); }) == ErrorKind::RingTooSmall);
  CHECK(kind_of([] { make_tk(2, 9); }) == ErrorKind::RingTooSmall);
  CHECK(kind_of([] { make_jt(2, 1, 6); }) == ErrorKind::RingTooSmall);
  CHECK_NOTHROW(make_jk(2, 6));
  CHECK_NOTHROW(make_toffoli(6));
}

TEST_CASE("make_zoo dispatches on the descriptor") {
  const auto f = make_zoo({"jt", {{"k", 2}, {"l", 1}}, {}}, 13);
  CHECK(f.descriptor().family == "jt");
  CHECK(same_function(f, make_jt(2, 1, 13)));
  CHECK(kind_of([] { make_zoo({"nope", {}, {}}, 9); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { make_zoo({"jk", {}, {}}, 9); }) == ErrorKind::InvalidArgument);
}
