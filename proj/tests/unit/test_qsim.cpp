#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qnb/nbhd.hpp"
#include "qnb/qnbhd.hpp"
#include "qnb/qsim.hpp"
#include "qnb/zoo.hpp"

using namespace qnb;
using namespace qnb::testing;

namespace {

StateVector random_state(const SpacePtr& space, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> amps(*space->total_dim());
  double norm = 0;
  for (auto& a : amps) {
    a = {gauss(rng), gauss(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(space, std::move(amps));
}

// The J_2 protocol pair: v = 0, w with layer i set at cell i.
std::pair<Word, Word> jk_pair(const BlockMap& f, unsigned k) {
  const auto v = Word::zero(f.domain());
  auto w = v;
  for (unsigned i = 1; i <= k; ++i) w = w.with(i, Letter{1} << (i - 1));
  return {v, w};
}

}  // namespace

TEST_CASE("states must be normalized") {
  const auto X = binary_sites(2);
  CHECK(kind_of([&] { StateVector(X, {1, 1, 0, 0}); }) == ErrorKind::InvalidArgument);
  CHECK_NOTHROW(StateVector(X, {1, 0, 0, 0}));
  const auto b = StateVector::basis(X, Word::from_index(X, 2));
  CHECK(b[2] == Amplitude(1));
}

TEST_CASE("permutation unitaries and phases preserve the norm") {
  std::mt19937_64 rng(41);
  const auto X = binary_sites(4);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_permutation(X, rng);
    const auto s = random_state(X, rng);
    const auto fs = apply_perm_unitary(f, s);
    CHECK(std::abs(fs.norm() - 1) < 1e-12);
    // Q(f) moves amplitudes along f.
    for (std::uint64_t i = 0; i < 16; ++i) CHECK(fs[f.table()[i]] == s[i]);
    const auto ph = local_phase(s, 1, 1);
    CHECK(std::abs(ph.norm() - 1) < 1e-12);
    const auto back = local_phase(ph, 1, 1);
    for (std::uint64_t i = 0; i < 16; ++i) CHECK(back[i] == s[i]);
  }
}

TEST_CASE("local phase turns psi+ into psi-") {
  const auto X = binary_sites(3);
  const auto v = Word::from_index(X, 0);
  const auto w = Word::from_index(X, 5);
  const auto plus = StateVector::pair(v, w, 1);
  const auto minus = StateVector::pair(v, w, -1);
  const auto flipped = local_phase(plus, 0, w[0]);
  CHECK(std::abs(flipped.inner(minus) - Amplitude(1)) < 1e-12);
  CHECK(std::abs(plus.inner(minus)) < 1e-12);
}

TEST_CASE("factor_check") {
  const auto X = binary_sites(3);
  const auto basis = StateVector::basis(X, Word::from_index(X, 6));
  const auto region = sites(X, {1});
  const auto fac = factor_check(basis, region);
  REQUIRE(fac.has_value());
  CHECK(fac->outside.letters == std::vector<Letter>{0, 1});
  CHECK(fac->local.amplitudes().size() == 2);
  CHECK(fac->local[1] == Amplitude(1));

  // Bell pair across sites 0 and 1, split in half.
  const auto bell = StateVector::pair(Word::from_index(X, 0), Word::from_index(X, 3), 1);
  CHECK_FALSE(factor_check(bell, sites(X, {0})).has_value());
  CHECK(factor_check(bell, sites(X, {0, 1})).has_value());
}

TEST_CASE("signaling with J_2 in one step") {
  const auto f = make_jk(2, 6);
  const auto [v, w] = jk_pair(f, 2);
  const auto r = signaling_demo(f, v, w, 2, 0, 1);
  CHECK(r.overlap < kOverlapThreshold);
  CHECK(r.factorized);
  CHECK(r.local_overlap < kOverlapThreshold);
  CHECK(r.distance == 2);
  CHECK_FALSE(r.classical_possible);
  CHECK(r.signaled());
  CHECK_FALSE(in_nbhd(f, 0).contains(2));
  CHECK(quantum_in_nbhd(f, 0).contains(2));
}

TEST_CASE("signaling preconditions") {
  const auto f = make_jk(2, 6);
  const auto v = Word::zero(f.domain());
  CHECK(kind_of([&] { signaling_demo(f, v, v, 2, 0, 1); }) == ErrorKind::ProtocolPreconditionFailed);
  // Differing at Alice alone spreads the difference past Bob's cell.
  CHECK(kind_of([&] { signaling_demo(f, v, v.with(2, 1), 2, 0, 1); }) ==
        ErrorKind::ProtocolPreconditionFailed);
}

TEST_CASE("classical flow is recognised when it exists") {
  const auto f = make_jk(2, 6);
  const auto pair = find_signaling_pair(f, 1, 0);
  REQUIRE(pair.has_value());
  const auto r = signaling_demo(f, pair->first, pair->second, 1, 0, 1);
  CHECK(r.signaled());
  CHECK(r.classical_possible);
}

TEST_CASE("Toffoli admits no one-step pair from distance two") {
  // Words reaching Bob's cell alone can differ only on N->_{T^-1}(0) = {0,1}.
  const auto t = make_toffoli(6);
  CHECK_FALSE(find_signaling_pair(t, 2, 0).has_value());
  CHECK_FALSE(find_signaling_pair(t, 5, 0).has_value());
  CHECK(find_signaling_pair(t, 1, 0).has_value());
}

TEST_CASE("every signaling site lies in the quantum neighbourhood") {
  for (const auto& f : {make_jk(2, 6), make_toffoli(6), make_toffoli(7), make_tk(1, 7)}) {
    const auto q = quantum_in_nbhd(f, 0);
    for (Site x = 0; x < f.domain()->size(); ++x) {
      const auto pair = find_signaling_pair(f, x, 0);
      if (!pair) continue;
      CHECK(q.contains(x));
      const auto r = signaling_demo(f, pair->first, pair->second, x, 0, 1);
      CHECK(r.signaled());
      CHECK(r.classical_possible == in_nbhd(f, 0).contains(x));
    }
  }
}

TEST_CASE("signaling over several steps") {
  const auto f = make_jk(2, 8);
  const auto pair = find_signaling_pair(f, 4, 0, 2);
  REQUIRE(pair.has_value());
  const auto r = signaling_demo(f, pair->first, pair->second, 4, 0, 2);
  CHECK(r.signaled());
  CHECK_FALSE(r.classical_possible);
  CHECK(quantum_in_nbhd(power(f, 2), 0).contains(4));
}
