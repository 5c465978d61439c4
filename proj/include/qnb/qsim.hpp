#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qnb/block_map.hpp"
#include "qnb/cellspace.hpp"

namespace qnb {

using Amplitude = std::complex<double>;

// Largest state dimension the simulator will allocate.
inline constexpr std::uint64_t kStateCap = std::uint64_t{1} << 20;
inline constexpr double kNormTolerance = 1e-12;
// Overlaps below this count as perfectly distinguishable states.
inline constexpr double kOverlapThreshold = 1e-12;

// Dense pure state over the words of a cell space, indexed like word indices.
class StateVector {
 public:
  // Throws unless the amplitudes have unit norm within kNormTolerance.
  StateVector(SpacePtr space, std::vector<Amplitude> amplitudes);
  static StateVector basis(SpacePtr space, const Word& word);
  // (|v> + sign |w>) / sqrt(2) for distinct words v, w.
  static StateVector pair(const Word& v, const Word& w, double sign);

  const SpacePtr& space() const { return space_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude operator[](std::uint64_t index) const { return amps_.at(index); }
  double norm() const;
  // <this|other>
  Amplitude inner(const StateVector& other) const;

 private:
  SpacePtr space_;
  std::vector<Amplitude> amps_;
};

// Q(f)|s>: the amplitude of |v> moves to |f(v)>.
StateVector apply_perm_unitary(const BlockMap& f, const StateVector& s);
// Negates the amplitudes of words carrying `selected` at `site`.
StateVector local_phase(const StateVector& s, Site site, Letter selected);

struct Factorization {
  PartialWord outside;  // common restriction of every nonzero amplitude off the region
  StateVector local;    // normalized state on the region's own cell space
};

// Splits s as |outside> (x) |local> when every word with nonzero amplitude
// has the same letters off `region`.
std::optional<Factorization> factor_check(const StateVector& s, const SiteSet& region);

struct SignalReport {
  MapDescriptor automaton;
  std::size_t cells = 0;
  Site alice = 0;
  Site bob = 0;
  std::optional<long> distance;  // ring distance, for ring spaces
  unsigned steps = 1;
  Letter alice_letter = 0;       // the letter at Alice's site selected by her phase
  double overlap = 1.0;          // |<phi+|phi->|
  bool factorized = false;       // both final states factor at Bob's site
  double local_overlap = 1.0;    // overlap of Bob's local states, when factorized
  bool classical_possible = false;

  bool signaled() const { return overlap < kOverlapThreshold && factorized; }
};

// Alice at `alice` encodes a bit as the relative sign of (|v> +- |w>)/sqrt(2)
// with a local phase; after `steps` applications of Q(f) Bob reads it at `bob`.
SignalReport signaling_demo(const BlockMap& f, const Word& v, const Word& w, Site alice, Site bob,
                            unsigned steps);

// Words v, w differing at `alice` whose images under f^steps agree off `bob`.
std::optional<std::pair<Word, Word>> find_signaling_pair(const BlockMap& f, Site alice, Site bob,
                                                         unsigned steps = 1);

}  // namespace qnb
