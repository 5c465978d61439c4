#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qnb/anf.hpp"
#include "qnb/cellspace.hpp"

namespace qnb {

// Input bit `bit` of the cell `offset` positions to the right of the output cell.
struct RelVar {
  int offset = 0;
  unsigned bit = 0;
  auto operator<=>(const RelVar&) const = default;
};

using LocalTerm = std::vector<RelVar>;  // AND of its variables; empty = 1
using LocalPoly = std::vector<LocalTerm>;  // XOR of its terms

// Translation-invariant rule over cells of `layers` bits: outputs[b] gives bit
// b of the new letter at cell 0 as a GF(2) polynomial in nearby input bits.
struct LocalRule {
  unsigned layers = 0;
  std::vector<LocalPoly> outputs;

  // Hull [lo, hi] of the offsets the rule reads (the declared window).
  Interval window() const;
};

// A LocalRule instantiated on a ring of `cells` cells. Variable ids are
// absolute: bit b of cell n is variable n*layers+b, matching the bit layout of
// word indices.
struct RingForm {
  std::size_t cells = 0;
  unsigned layers = 0;
  std::vector<Anf> forward;
  std::optional<std::vector<Anf>> inverse;
  // For composites of invertible ring maps: the factors, first applied
  // first. Empty when the form is not known to factor.
  std::vector<std::shared_ptr<const RingForm>> factors;

  std::size_t bits() const { return cells * layers; }
  // Relative form of the cell-0 outputs; throws unless every term fits in
  // less than half the ring, which is what makes the relative form unique.
  LocalRule local_rule(bool of_inverse = false) const;
};

// Provenance of a map, carried into reports and the JSON format.
struct MapDescriptor {
  std::string family;
  std::map<std::string, long> params;
  std::string detail;  // free-form label for composites

  std::string label() const;
};

// A bijection between the word sets of two cell spaces, either as an explicit
// permutation table or as a ring rule. Immutable; copies share state.
class BlockMap {
 public:
  const SpacePtr& domain() const;
  const SpacePtr& codomain() const;
  const MapDescriptor& descriptor() const;

  bool is_explicit() const;
  bool is_ring() const { return !is_explicit(); }
  // Explicit maps: codomain index of every domain index, and its inverse.
  const std::vector<std::uint64_t>& table() const;
  const std::vector<std::uint64_t>& inverse_table() const;
  const RingForm& ring() const;

  bool has_inverse() const;
  std::optional<BlockMap> inverse_hint() const;

  std::vector<Letter> apply(std::span<const Letter> letters) const;
  Word apply(const Word& word) const;
  // Output letters at the listed codomain sites only.
  std::vector<Letter> apply_at(std::span<const Letter> letters, std::span<const Site> outputs) const;
  std::vector<Letter> apply_inverse(std::span<const Letter> letters) const;

  struct Impl;
  explicit BlockMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

BlockMap make_explicit_map(SpacePtr domain, SpacePtr codomain, std::vector<std::uint64_t> table,
                           MapDescriptor descriptor = {"explicit", {}, {}});
// Builds a ring map; a provided inverse is checked symbolically. Without one,
// the inverse is derived by enumeration when the ring is small enough.
BlockMap make_ring_map(std::size_t cells, const LocalRule& rule,
                       const std::optional<LocalRule>& inverse, MapDescriptor descriptor);
BlockMap identity_map(SpacePtr space);

// g after f.
BlockMap compose(const BlockMap& g, const BlockMap& f);
BlockMap invert(const BlockMap& f);
// f applied n >= 1 times.
BlockMap power(const BlockMap& f, unsigned n);
// Explicit-table form of f; requires an enumerable domain.
BlockMap tabulate(const BlockMap& f);

// True when both maps agree on every word (symbolically for ring maps,
// exhaustively for tables).
bool same_function(const BlockMap& a, const BlockMap& b);

// Inverse rule of a bijective local rule, found by inverting the induced
// permutation on a ring of `probe_cells` cells and reading off the local form.
LocalRule derive_inverse_rule(const LocalRule& rule, std::size_t probe_cells);

std::vector<Anf> instantiate(const LocalRule& rule, std::size_t cells);

// Letters <-> packed bits for ring spaces.
std::vector<std::uint64_t> letters_to_bits(std::span<const Letter> letters, unsigned layers);
std::vector<Letter> bits_to_letters(std::span<const std::uint64_t> bits, std::size_t cells,
                                    unsigned layers);

}  // namespace qnb
