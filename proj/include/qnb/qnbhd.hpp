#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qnb/block_map.hpp"
#include "qnb/cellspace.hpp"
#include "qnb/nbhd.hpp"

namespace qnb {

// Matrix element <v| Q(f)^dag (|w><w'| on B) Q(f) |v'>, which is 0 or 1:
// 1 iff f(v) is w on B, f(v') is w' on B, and f(v), f(v') agree off B.
int q_oracle(const BlockMap& f, const Word& v, const Word& v2, const PartialWord& w,
             const PartialWord& w2);

// Words demonstrating that one of the three localization conditions fails.
//   condition 1: (v, w) agree on A, yet f(v) and f(w) differ on B.
//   condition 2: (v, w) differ off A, yet f(v) and f(w) agree off B.
//   condition 3: (v, w, v', w') with v ~ w and v' ~ w' agreeing off A,
//                v = v' and w = w' on A, and exactly one of the pairs having
//                images that agree off B.
struct Counterexample {
  int condition = 0;
  std::vector<Word> words;
};

// Whether conjugation by Q(f) maps the observables on output region B into
// the observables on input region A, split into the three conditions.
struct QuantumLocalityWitness {
  SiteSet B;
  SiteSet A;
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  std::vector<Counterexample> counterexamples;  // one per failed condition

  bool localized() const { return cond1 && cond2 && cond3; }
};

// How condition 3 and quantum membership are decided.
//   automatic:  enumerate a reduced window when it fits the enumeration cap,
//               otherwise (ring maps only) use the polynomial commutant test.
//   enumerate:  tabulate the map and enumerate; needs an enumerable domain.
//   algebraic:  ring maps only; decide every cell with the commutant test.
enum class Method { automatic, enumerate, algebraic };

QuantumLocalityWitness quantum_localized(const BlockMap& f, const SiteSet& B, const SiteSet& A,
                                         Method method = Method::automatic);

// Re-evaluates a counterexample; true iff it still shows its condition failing.
bool replays(const BlockMap& f, const SiteSet& B, const SiteSet& A, const Counterexample& c);

// Localization decided straight from q_oracle over every (v, v', w, w'):
// q must vanish when v and v' differ off A, and otherwise depend only on
// (v_A, v'_A, w, w'). Exhaustive; requires an enumerable domain.
bool localized_by_matrix_elements(const BlockMap& f, const SiteSet& B, const SiteSet& A);

// Smallest input region A such that Q(f) localizes {y} into A.
SiteSet quantum_in_nbhd(const BlockMap& f, Site y, Method method = Method::automatic);
// y -> quantum_in_nbhd(f, y), oriented codomain -> domain.
NbhdScheme quantum_in_scheme(const BlockMap& f, int dom_slice = 0, int cod_slice = 1,
                             Method method = Method::automatic);

struct BoundReport {
  NbhdScheme lower;     // classical in-scheme of f united with out-scheme of its inverse
  NbhdScheme computed;  // quantum in-scheme
  NbhdScheme upper;     // intersection of the two triple compositions
  std::vector<bool> lower_holds;  // per codomain site: lower contained in computed
  std::vector<bool> upper_holds;  // per codomain site: computed contained in upper

  bool all_hold() const;
};

BoundReport simple_bound(const BlockMap& f, Method method = Method::automatic);

// Bound on the quantum in-scheme of f_n o ... o f_1 (fs listed f_1 first):
// the union over k of
//   in(f_{k-1} o .. o f_1) o quantum_in(f_k) o out((f_n o .. o f_{k+1})^-1).
// Space X_i carries slice label i, so the result runs from slice n+1 to 1.
NbhdScheme composition_bound(std::span<const BlockMap> fs, Method method = Method::automatic);

// Whether the transpose of f's quantum in-scheme equals the quantum
// in-scheme of f's inverse.
bool duality_check(const BlockMap& f, Method method = Method::automatic);

struct IterationBound {
  long alpha = 0;
  long beta = 0;
  long gamma = 0;
  long delta = 0;
  unsigned k = 1;
  Interval interval;
};

// For ring maps with in-neighbourhoods within [n-alpha, n+beta] and inverse
// in-neighbourhoods within [n-gamma, n+delta], an interval containing the
// quantum in-neighbourhood of cell 0 under the k-th iterate.
IterationBound iterate_bound(long alpha, long beta, long gamma, long delta, unsigned k);

// Radii read off a ring map's classical neighbourhoods of cell 0, clipped at
// zero so that the enclosing intervals still contain 0.
IterationBound ring_radii(const BlockMap& f, unsigned k);

}  // namespace qnb
