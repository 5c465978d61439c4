#include "qnb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "qnb/error.hpp"
#include "qnb/json_io.hpp"
#include "qnb/nbhd.hpp"
#include "qnb/qnbhd.hpp"
#include "qnb/qsim.hpp"
#include "qnb/zoo.hpp"

namespace qnb {

SpacePtr binary_space(std::size_t sites) {
  std::vector<SiteSpec> specs;
  for (std::size_t s = 0; s < sites; ++s) specs.push_back({"s" + std::to_string(s), 2});
  return CellSpace::make(std::move(specs));
}

BlockMap random_bijection(const SpacePtr& space, std::mt19937_64& rng) {
  const auto dim = space->require_enumerable("random bijection");
  std::vector<std::uint64_t> table(dim);
  std::iota(table.begin(), table.end(), 0);
  for (std::uint64_t i = dim; i > 1; --i) std::swap(table[i - 1], table[rng() % i]);
  return make_explicit_map(space, space, std::move(table), {"random", {}, {}});
}

std::vector<BlockMap> all_bijections(const SpacePtr& space) {
  const auto dim = space->require_enumerable("bijection listing");
  std::vector<std::uint64_t> table(dim);
  std::iota(table.begin(), table.end(), 0);
  std::vector<BlockMap> out;
  do {
    out.push_back(make_explicit_map(space, space, table, {"enumerated", {}, {}}));
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

std::vector<SiteSet> all_subsets(const SpacePtr& space) {
  const std::size_t n = space->size();
  std::vector<SiteSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SiteSet s(space);
    for (Site x = 0; x < n; ++x) {
      if ((mask >> x) & 1U) s.insert(x);
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

class Tally {
 public:
  Tally(int id, std::string name) {
    result_.id = id;
    result_.name = std::move(name);
  }

  // Records one comparison; the note is kept for failures, or always when `always` is set.
  void check(bool ok, const std::string& note, bool always = false) {
    ++result_.checks;
    if (!ok) ++result_.failures;
    if ((!ok || always) && result_.details.size() < kMaxDetails) {
      result_.details.push_back((ok ? "ok: " : "FAIL: ") + note);
    }
  }
  void note(const std::string& text) { result_.details.push_back(text); }

  CriterionResult finish(std::chrono::steady_clock::time_point start) {
    result_.passed = result_.failures == 0;
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result_;
  }

 private:
  static constexpr std::size_t kMaxDetails = 40;
  CriterionResult result_;
};

using Clock = std::chrono::steady_clock;

std::string shown(const SiteSet& s) { return describe(s); }

void expect_interval(Tally& t, const std::string& what, const SiteSet& got, long lo, long hi) {
  const auto want = ring_interval(got.space(), lo, hi);
  t.check(got == want, what + " = " + shown(got) + ", expected " + format_interval({lo, hi}), true);
}

CriterionResult jk_intervals(std::uint64_t) {
  const auto start = Clock::now();
  Tally t(1, "J_k intervals");
  for (unsigned k : {2U, 3U}) {
    for (unsigned n : {1U, 2U}) {
      const std::size_t ring = 2 * k * n + 4;
      const auto f = power(make_jk(k, ring), n);
      const auto tag = "J_" + std::to_string(k) + "^" + std::to_string(n) + " ring " + std::to_string(ring);
      const long kn = static_cast<long>(k * n);
      const long nl = static_cast<long>(n);
      expect_interval(t, tag + " in", in_nbhd(f, 0), 0, nl);
      expect_interval(t, tag + " inverse in", in_nbhd(invert(f), 0), -kn, -nl);
      expect_interval(t, tag + " quantum", quantum_in_nbhd(f, 0), 0, kn);
    }
  }
  return t.finish(start);
}

CriterionResult toffoli_intervals(std::uint64_t) {
  const auto start = Clock::now();
  Tally t(2, "Toffoli intervals");
  const auto tof = make_toffoli(default_ring_toffoli());
  expect_interval(t, "T in", in_nbhd(tof, 0), 0, 1);
  expect_interval(t, "T inverse out", out_nbhd(invert(tof), 0), -1, 0);
  expect_interval(t, "T quantum", quantum_in_nbhd(tof, 0), -1, 2);

  // Wide enough that [-2,6] does not wrap.
  const std::size_t ring = 19;
  const auto t2 = make_tk(2, ring);
  expect_interval(t, "T_2 quantum", quantum_in_nbhd(t2, 0), -2, 4);

  const std::vector<BlockMap> chain{t2, t2};
  const auto composite = compose(t2, t2);
  const auto q = quantum_in_scheme(composite, 0, 1);
  const auto stated = ring_interval(composite.domain(), -2, 6);
  t.check(q.at(0).subset_of(stated),
          "T_2 o T_2 quantum " + shown(q.at(0)) + " within [-2,6]", true);
  const auto bound = composition_bound(chain);
  bool within = true;
  for (Site y = 0; y < ring; ++y) within = within && q.at(y).subset_of(bound.at(y));
  t.check(within, "T_2 o T_2 quantum within the composition bound " + shown(bound.at(0)), true);
  t.note(std::string("T_2 o T_2 quantum ") + (q.at(0) == stated ? "equals" : "is strictly inside") +
         " [-2,6]; composition bound " + (bound.at(0) == stated ? "equals" : "differs from") + " [-2,6]");
  return t.finish(start);
}

CriterionResult jt_intervals(std::uint64_t) {
  const auto start = Clock::now();
  Tally t(3, "JT intervals");
  for (auto [k, l] : {std::pair{2U, 1U}, std::pair{3U, 1U}}) {
    const auto f = make_jt(k, l, default_ring_jt(k, l));
    const auto tag = "JT_{" + std::to_string(k) + "," + std::to_string(l) + "}";
    const long K = k, L = l;
    expect_interval(t, tag + " in", in_nbhd(f, 0), 0, L + 1);
    expect_interval(t, tag + " inverse in", in_nbhd(invert(f), 0), -K - L, -1);
    expect_interval(t, tag + " quantum", quantum_in_nbhd(f, 0), -L, K + 2 * L);
  }
  {
    const unsigned k = 2, l = 1, n = 2;
    const auto f = make_jt_iterated(k, l, n, default_ring_jt_iterated(k, l, n));
    const long K = k, L = l, N = n;
    expect_interval(t, "iterated JT (2,1,2) in", in_nbhd(f, 0), 0, L + N);
    expect_interval(t, "iterated JT (2,1,2) inverse in", in_nbhd(invert(f), 0), -K * N - L, -N);
    expect_interval(t, "iterated JT (2,1,2) quantum", quantum_in_nbhd(f, 0), -L, K * N + 2 * L);
  }
  return t.finish(start);
}

std::vector<BlockMap> sandwich_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto four = binary_space(4);
  std::vector<BlockMap> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_bijection(four, rng));
  for (auto& f : all_bijections(binary_space(2))) out.push_back(f);
  return out;
}

CriterionResult sandwich(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t(4, "sandwich bounds");
  const auto corpus = sandwich_corpus(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto report = simple_bound(corpus[i]);
    for (Site y = 0; y < report.lower_holds.size(); ++y) {
      t.check(report.lower_holds[y], "map " + std::to_string(i) + " site " + std::to_string(y) + " lower bound");
      t.check(report.upper_holds[y], "map " + std::to_string(i) + " site " + std::to_string(y) + " upper bound");
    }
  }
  t.note(std::to_string(corpus.size()) + " maps, seed " + std::to_string(seed));
  return t.finish(start);
}

CriterionResult duality(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t(5, "duality");
  const auto corpus = sandwich_corpus(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    t.check(duality_check(corpus[i]), "map " + std::to_string(i));
  }
  t.note(std::to_string(corpus.size()) + " maps, seed " + std::to_string(seed));
  return t.finish(start);
}

CriterionResult composition(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t(6, "composition bound");
  std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);
  for (int c = 0; c < 50; ++c) {
    const std::size_t length = 2 + rng() % 2;
    const auto space = binary_space(3 + rng() % 2);
    std::vector<BlockMap> chain;
    for (std::size_t i = 0; i < length; ++i) chain.push_back(random_bijection(space, rng));
    BlockMap composite = chain[0];
    for (std::size_t i = 1; i < length; ++i) composite = compose(chain[i], composite);
    const auto bound = composition_bound(chain);
    const auto q = quantum_in_scheme(composite, 1, static_cast<int>(length) + 1);
    for (Site y = 0; y < space->size(); ++y) {
      t.check(q.at(y).subset_of(bound.at(y)), "chain " + std::to_string(c) + " site " + std::to_string(y));
    }
  }
  t.note("50 chains, seed " + std::to_string(seed));
  return t.finish(start);
}

CriterionResult oracle_equivalence(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t(7, "oracle equivalence");
  std::vector<BlockMap> corpus = all_bijections(binary_space(2));
  std::mt19937_64 rng(seed ^ 0xbb67ae8584caa73bULL);
  const auto three = binary_space(3);
  for (int i = 0; i < 50; ++i) corpus.push_back(random_bijection(three, rng));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    const auto subsets = all_subsets(f.domain());
    for (const auto& B : subsets) {
      for (const auto& A : subsets) {
        const auto w = quantum_localized(f, B, A);
        const bool oracle = localized_by_matrix_elements(f, B, A);
        t.check(w.localized() == oracle,
                "map " + std::to_string(i) + " B=" + shown(B) + " A=" + shown(A));
      }
    }
  }
  t.note(std::to_string(corpus.size()) + " maps, seed " + std::to_string(seed));
  return t.finish(start);
}

CriterionResult signaling(std::uint64_t) {
  const auto start = Clock::now();
  Tally t(8, "signaling");
  const std::size_t ring = 6;
  const auto f = make_jk(2, ring);
  const auto space = f.domain();
  const auto v = Word::zero(space);
  // Layer i set at cell i, for i = 1, 2.
  const auto w = v.with(1, 1).with(2, 2);
  const auto report = signaling_demo(f, v, w, 2, 0, 1);
  t.check(report.overlap < kOverlapThreshold, "overlap " + std::to_string(report.overlap), true);
  t.check(report.distance && *report.distance == 2,
          "distance " + (report.distance ? std::to_string(*report.distance) : std::string("none")), true);
  t.check(report.steps == 1, "steps 1", true);
  t.check(!report.classical_possible, "classical signaling impossible", true);
  t.check(report.factorized, "final states factor at Bob's cell", true);
  const auto classical = in_nbhd(f, 0);
  t.check(classical == ring_interval(space, 0, 1), "classical in-neighbourhood of Bob " + shown(classical), true);
  return t.finish(start);
}

CriterionResult iterate_containment(std::uint64_t) {
  const auto start = Clock::now();
  Tally t(9, "iterate containment");
  struct Entry {
    MapDescriptor descriptor;
    std::size_t ring;
  };
  const std::vector<Entry> zoo{
      {{"jk", {{"k", 2}}, {}}, default_ring_jk(2)},
      {{"jk", {{"k", 3}}, {}}, default_ring_jk(3)},
      {{"toffoli", {}, {}}, default_ring_toffoli()},
      {{"tk", {{"k", 2}}, {}}, default_ring_tk(2)},
      {{"jt", {{"k", 2}, {"l", 1}}, {}}, default_ring_jt(2, 1)},
      {{"jt", {{"k", 3}, {"l", 1}}, {}}, default_ring_jt(3, 1)},
      {{"jt-iterated", {{"k", 2}, {"l", 1}, {"n", 2}}, {}}, default_ring_jt_iterated(2, 1, 2)},
  };
  for (const auto& entry : zoo) {
    const auto base = make_zoo(entry.descriptor, entry.ring);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto radii = ring_radii(base, k);
      const long width = radii.interval.hi - radii.interval.lo + 1;
      const std::size_t ring = std::max<std::size_t>(entry.ring, static_cast<std::size_t>(2 * width + 1));
      const auto fk = power(make_zoo(entry.descriptor, ring), k);
      const auto q = quantum_in_nbhd(fk, 0);
      const auto bound = ring_interval(fk.domain(), radii.interval.lo, radii.interval.hi);
      t.check(q.subset_of(bound),
              base.descriptor().label() + "^" + std::to_string(k) + " ring " + std::to_string(ring) +
                  ": quantum " + shown(q) + " within " + format_interval(radii.interval),
              true);
    }
  }
  return t.finish(start);
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {1, "J_k intervals", jk_intervals},
      {2, "Toffoli intervals", toffoli_intervals},
      {3, "JT intervals", jt_intervals},
      {4, "sandwich bounds", sandwich},
      {5, "duality", duality},
      {6, "composition bound", composition},
      {7, "oracle equivalence", oracle_equivalence},
      {8, "signaling", signaling},
      {9, "iterate containment", iterate_containment},
  };
  return all;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    CriterionResult r;
    try {
      r = c.run(seed);
    } catch (const std::exception& e) {
      r.id = c.id;
      r.name = c.name;
      r.passed = false;
      r.failures = 1;
      r.details.push_back(std::string("error: ") + e.what());
    }
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qnb
