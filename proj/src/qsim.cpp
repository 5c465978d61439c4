#include "qnb/qsim.hpp"

#include <cmath>

#include "projection.hpp"
#include "qnb/error.hpp"
#include "qnb/nbhd.hpp"

namespace qnb {

namespace {

std::uint64_t require_state_dim(const CellSpace& space) {
  const auto dim = space.total_dim();
  if (!dim || *dim > kStateCap) {
    throw Error(ErrorKind::DimensionCapExceeded, "state vector over 2^" + std::to_string(space.log2_dim()) +
                                                     " words exceeds the simulator cap of 2^20");
  }
  return *dim;
}

double squared_norm(const std::vector<Amplitude>& amps) {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return sum;
}

bool nonzero(const Amplitude& a) { return std::norm(a) > kNormTolerance * kNormTolerance; }

}  // namespace

StateVector::StateVector(SpacePtr space, std::vector<Amplitude> amplitudes)
    : space_(std::move(space)), amps_(std::move(amplitudes)) {
  if (amps_.size() != require_state_dim(*space_)) {
    throw Error(ErrorKind::ArityMismatch, "amplitude count does not match the space");
  }
  if (std::abs(std::sqrt(squared_norm(amps_)) - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::InvalidArgument, "state is not normalized");
  }
}

StateVector StateVector::basis(SpacePtr space, const Word& word) {
  require_same_space(word.space(), space, "basis word on another space");
  std::vector<Amplitude> amps(require_state_dim(*space));
  amps[word.index()] = 1.0;
  return StateVector(std::move(space), std::move(amps));
}

StateVector StateVector::pair(const Word& v, const Word& w, double sign) {
  require_same_space(v.space(), w.space(), "superposed words live on different spaces");
  if (v == w) throw Error(ErrorKind::InvalidArgument, "superposition of a word with itself");
  std::vector<Amplitude> amps(require_state_dim(*v.space()));
  const double h = 1.0 / std::sqrt(2.0);
  amps[v.index()] = h;
  amps[w.index()] = sign * h;
  return StateVector(v.space(), std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

Amplitude StateVector::inner(const StateVector& other) const {
  require_same_space(space_, other.space_, "inner product across spaces");
  Amplitude sum = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) sum += std::conj(amps_[i]) * other.amps_[i];
  return sum;
}

StateVector apply_perm_unitary(const BlockMap& f, const StateVector& s) {
  require_same_space(s.space(), f.domain(), "state is not on the map's domain");
  require_state_dim(*f.codomain());
  std::vector<Amplitude> out(s.amplitudes().size());
  if (f.is_explicit()) {
    const auto& table = f.table();
    for (std::uint64_t i = 0; i < table.size(); ++i) out[table[i]] = s[i];
  } else {
    const auto& X = *f.domain();
    for (std::uint64_t i = 0; i < out.size(); ++i) {
      if (s[i] == Amplitude{}) continue;
      out[f.codomain()->encode(f.apply(X.decode(i)))] = s[i];
    }
  }
  return StateVector(f.codomain(), std::move(out));
}

StateVector local_phase(const StateVector& s, Site site, Letter selected) {
  const auto& space = *s.space();
  if (site >= space.size()) throw Error(ErrorKind::SpaceMismatch, "phase site is not in the state's space");
  auto amps = s.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (space.digit(i, site) == selected) amps[i] = -amps[i];
  }
  return StateVector(s.space(), std::move(amps));
}

std::optional<Factorization> factor_check(const StateVector& s, const SiteSet& region) {
  require_same_space(region.space(), s.space(), "region is not on the state's space");
  const auto& space = *s.space();
  const auto outside = region.complement();
  detail::Projection off(space, outside), on(space, region);
  const auto sites = region.members();
  const auto local_space = space.subspace(sites);
  std::vector<Amplitude> local(*local_space->total_dim());
  std::optional<std::uint64_t> key;
  std::uint64_t witness = 0;
  for (std::uint64_t i = 0; i < s.amplitudes().size(); ++i) {
    if (!nonzero(s[i])) continue;
    if (!key) {
      key = off(i);
      witness = i;
    } else if (off(i) != *key) {
      return std::nullopt;
    }
    local[on(i)] = s[i];
  }
  if (!key) return std::nullopt;
  return Factorization{Word::from_index(s.space(), witness).restrict_to(outside),
                       StateVector(local_space, std::move(local))};
}

SignalReport signaling_demo(const BlockMap& f, const Word& v, const Word& w, Site alice, Site bob,
                            unsigned steps) {
  require_same_space(f.domain(), f.codomain(), "signaling needs a map from a space to itself");
  require_same_space(v.space(), f.domain(), "v is not on the automaton's space");
  require_same_space(w.space(), f.domain(), "w is not on the automaton's space");
  const auto& space = *f.domain();
  if (alice >= space.size() || bob >= space.size()) {
    throw Error(ErrorKind::ArityMismatch, "Alice's or Bob's site is out of range");
  }
  if (steps == 0) throw Error(ErrorKind::InvalidArgument, "the protocol needs at least one step");
  if (v[alice] == w[alice]) {
    throw Error(ErrorKind::ProtocolPreconditionFailed,
                "v and w carry the same letter at Alice's site " + space.id(alice));
  }
  Word fv = v, fw = w;
  for (unsigned t = 0; t < steps; ++t) {
    fv = f.apply(fv);
    fw = f.apply(fw);
  }
  for (Site s = 0; s < space.size(); ++s) {
    if (s != bob && fv[s] != fw[s]) {
      throw Error(ErrorKind::ProtocolPreconditionFailed,
                  "evolved words differ at site " + space.id(s) + ", outside Bob's site " + space.id(bob));
    }
  }

  SignalReport report;
  report.automaton = f.descriptor();
  report.cells = space.size();
  report.alice = alice;
  report.bob = bob;
  report.steps = steps;
  report.alice_letter = w[alice];
  if (space.is_ring()) {
    const long n = static_cast<long>(space.size());
    const long d = std::labs(static_cast<long>(alice) - static_cast<long>(bob));
    report.distance = std::min(d, n - d);
  }

  auto plus = StateVector::pair(v, w, 1.0);
  auto minus = local_phase(plus, alice, w[alice]);
  for (unsigned t = 0; t < steps; ++t) {
    plus = apply_perm_unitary(f, plus);
    minus = apply_perm_unitary(f, minus);
  }
  report.overlap = std::abs(plus.inner(minus));
  const auto at_bob = SiteSet::single(f.domain(), bob);
  auto plus_local = factor_check(plus, at_bob);
  auto minus_local = factor_check(minus, at_bob);
  report.factorized = plus_local && minus_local && plus_local->outside == minus_local->outside;
  if (report.factorized) report.local_overlap = std::abs(plus_local->local.inner(minus_local->local));
  report.classical_possible = in_nbhd(power(f, steps), bob).contains(alice);
  return report;
}

std::optional<std::pair<Word, Word>> find_signaling_pair(const BlockMap& f, Site alice, Site bob,
                                                         unsigned steps) {
  require_same_space(f.domain(), f.codomain(), "signaling needs a map from a space to itself");
  const auto g = tabulate(power(f, steps));
  const auto& space = *g.domain();
  auto others = SiteSet::all(g.domain());
  others.erase(bob);
  detail::Projection off_bob(space, others);
  constexpr auto kUnseen = ~std::uint64_t{0};
  // First word seen per image class, and whether a second alice letter showed up.
  std::vector<std::uint64_t> first(off_bob.size(), kUnseen);
  const auto& table = g.table();
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    auto& rep = first[off_bob(table[i])];
    if (rep == kUnseen) {
      rep = i;
    } else if (space.digit(rep, alice) != space.digit(i, alice)) {
      return std::pair{Word::from_index(g.domain(), rep), Word::from_index(g.domain(), i)};
    }
  }
  return std::nullopt;
}

}  // namespace qnb
