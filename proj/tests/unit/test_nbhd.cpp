#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qnb/nbhd.hpp"
#include "qnb/zoo.hpp"

using namespace qnb;
using namespace qnb::testing;

namespace {

// y depends on x iff some word and some letter change at x alone move f's letter at y.
std::vector<SiteSet> brute_inputs(const BlockMap& f) {
  const auto& X = f.domain();
  const auto& Y = f.codomain();
  std::vector<SiteSet> out(Y->size(), SiteSet(X));
  const auto dim = *X->total_dim();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const auto v = Word::from_index(X, i);
    const auto fv = f.apply(v);
    for (Site x = 0; x < X->size(); ++x) {
      for (Letter a = 0; a < X->alphabet_size(x); ++a) {
        if (a == v[x]) continue;
        const auto fw = f.apply(v.with(x, a));
        for (Site y = 0; y < Y->size(); ++y) {
          if (fw[y] != fv[y]) out[y].insert(x);
        }
      }
    }
  }
  return out;
}

// f(v)_B is determined by v_A, by grouping all words on their A-restriction.
bool brute_locality(const BlockMap& f, const SiteSet& B, const SiteSet& A) {
  std::map<std::vector<Letter>, std::vector<Letter>> seen;
  const auto dim = *f.domain()->total_dim();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const auto v = Word::from_index(f.domain(), i);
    const auto key = v.restrict_to(A).letters;
    const auto val = f.apply(v).restrict_to(B).letters;
    auto [it, fresh] = seen.emplace(key, val);
    if (!fresh && it->second != val) return false;
  }
  return true;
}

SiteSet shifted(const SiteSet& s, long by) {
  SiteSet out(s.space());
  for (Site x : s.members()) out.insert(ring_site(*s.space(), static_cast<long>(x) + by));
  return out;
}

}  // namespace

TEST_CASE("dependency graph matches brute force on explicit maps") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2U, 3U, 4U}) {
    const auto space = binary_sites(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_permutation(space, rng);
      const auto want = brute_inputs(f);
      const auto g = dependency_graph(f);
      for (Site y = 0; y < n; ++y) CHECK(g.inputs(y) == want[y]);
    }
  }
}

TEST_CASE("dependency graph matches brute force on mixed alphabets") {
  std::mt19937_64 rng(12);
  const auto space = CellSpace::make({{"a", 3}, {"b", 2}, {"c", 4}});
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_permutation(space, rng);
    const auto want = brute_inputs(f);
    for (Site y = 0; y < 3; ++y) CHECK(in_nbhd(f, y) == want[y]);
  }
}

TEST_CASE("ring dependency read from polynomials matches brute force") {
  for (const auto& f : {make_jk(2, 6), make_toffoli(6), invert(make_toffoli(7)), make_jk(3, 8)}) {
    if (!f.domain()->enumerable()) continue;
    const auto want = brute_inputs(tabulate(f));
    for (Site y = 0; y < f.codomain()->size(); ++y) CHECK(in_nbhd(f, y) == want[y]);
  }
}

TEST_CASE("out-neighbourhoods are the transpose of in-neighbourhoods") {
  std::mt19937_64 rng(13);
  const auto space = binary_sites(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_permutation(space, rng);
    CHECK(out_scheme(f) == scheme_transpose(in_scheme(f)));
    const auto g = dependency_graph(f);
    for (auto [x, y] : g.edges()) {
      CHECK(in_nbhd(f, y).contains(x));
      CHECK(out_nbhd(f, x).contains(y));
    }
  }
}

TEST_CASE("locality violations agree with brute force") {
  std::mt19937_64 rng(14);
  const auto space = binary_sites(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_permutation(space, rng);
    const auto B = random_subset(space, rng);
    const auto A = random_subset(space, rng);
    const auto cex = find_locality_violation(f, B, A);
    CHECK(cex.has_value() == !brute_locality(f, B, A));
    if (cex) {
      CHECK(cex->first.restrict_to(A) == cex->second.restrict_to(A));
      CHECK(f.apply(cex->first).restrict_to(B) != f.apply(cex->second).restrict_to(B));
    }
    // The in-neighbourhood of B is always a valid region.
    SiteSet inputs(space);
    for (Site y : B.members()) inputs |= in_nbhd(f, y);
    CHECK(check_locality(f, B, inputs));
  }
}

TEST_CASE("ring locality violations are genuine") {
  const auto f = make_toffoli(9);
  const auto X = f.domain();
  const auto B = sites(X, {0});
  const auto cex = find_locality_violation(f, B, sites(X, {0}));
  REQUIRE(cex.has_value());
  CHECK(cex->first.restrict_to(sites(X, {0})) == cex->second.restrict_to(sites(X, {0})));
  CHECK(f.apply(cex->first)[0] != f.apply(cex->second)[0]);
  CHECK_FALSE(find_locality_violation(f, B, sites(X, {0, 1})).has_value());
}

TEST_CASE("ring neighbourhoods are translation covariant") {
  for (const auto& f : {make_jk(2, 9), make_toffoli(9), make_tk(2, 15), make_jt(2, 1, 13)}) {
    const auto at0 = in_nbhd(f, 0);
    const auto out0 = out_nbhd(f, 0);
    for (Site y = 1; y < f.domain()->size(); ++y) {
      CHECK(in_nbhd(f, y) == shifted(at0, y));
      CHECK(out_nbhd(f, y) == shifted(out0, y));
    }
  }
}

TEST_CASE("composition is subadditive for classical neighbourhoods") {
  std::mt19937_64 rng(15);
  const auto space = binary_sites(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_permutation(space, rng);
    const auto g = random_permutation(space, rng);
    const auto gf = compose(g, f);
    const auto bound = scheme_compose(in_scheme(f, 0, 1), in_scheme(g, 1, 2));
    CHECK(in_scheme(gf, 0, 2).contained_in(bound));
  }
}

TEST_CASE("scheme algebra") {
  const auto X = binary_sites(3);
  auto n = NbhdScheme(X, X, 1, 0);
  n.set(0, sites(X, {0, 1}));
  n.set(2, sites(X, {2}));
  CHECK(n.image(sites(X, {0, 2})) == sites(X, {0, 1, 2}));
  CHECK(n.image(sites(X, {1})).empty());

  const auto t = scheme_transpose(n);
  CHECK(t.source_slice() == 0);
  CHECK(t.target_slice() == 1);
  CHECK(t.at(1) == sites(X, {0}));
  CHECK(scheme_transpose(t) == n);

  const auto id = NbhdScheme::identity(X, 0);
  CHECK(scheme_compose(id, n) == n);
  CHECK(scheme_union(n, n) == n);
  CHECK(scheme_intersect(n, NbhdScheme(X, X, 1, 0)) == NbhdScheme(X, X, 1, 0));
}

TEST_CASE("scheme orientation is checked") {
  const auto X = binary_sites(2);
  const auto a = NbhdScheme(X, X, 1, 0);
  const auto b = NbhdScheme(X, X, 2, 1);
  CHECK_NOTHROW(scheme_compose(a, b));
  CHECK(kind_of([&] { scheme_compose(b, a); }) == ErrorKind::SpaceMismatch);
  CHECK(kind_of([&] { scheme_union(a, b); }) == ErrorKind::SpaceMismatch);
  CHECK(kind_of([&] { (void)a.contained_in(scheme_transpose(a)); }) == ErrorKind::SpaceMismatch);
}

TEST_CASE("identity and shift neighbourhoods") {
  const auto ring = CellSpace::ring(5, 4);
  const auto id = identity_map(ring);
  for (Site y = 0; y < 5; ++y) CHECK(in_nbhd(id, y) == SiteSet::single(ring, y));
  CHECK(in_scheme(id, 0, 0) == NbhdScheme::identity(ring, 0));

  const auto shift = make_ring_map(5, LocalRule{1, {{{{1, 0}}}}}, std::nullopt, {"shift", {}, {}});
  CHECK(in_nbhd(shift, 0).arc() == Interval{1, 1});
  CHECK(out_nbhd(shift, 0).arc() == Interval{-1, -1});
}
