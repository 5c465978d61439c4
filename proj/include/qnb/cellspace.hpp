#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qnb {

using Letter = std::uint32_t;
using Site = std::size_t;

// Largest word count any exhaustive scan may visit. Defaults to 2^22.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

struct SiteSpec {
  std::string id;
  std::uint32_t alphabet_size = 0;
};

class CellSpace;
using SpacePtr = std::shared_ptr<const CellSpace>;

// A finite ordered set of sites, each carrying its own alphabet.
//
// Words are packed in mixed radix with site 0 as the least significant digit,
// so for a ring of 2^m-letter cells the bit at position n*m+b of a word index
// is bit b of the letter at cell n.
class CellSpace {
 public:
  static SpacePtr make(std::vector<SiteSpec> sites);
  // Cells labelled "0".."n-1"; neighbourhoods on it are reported as arcs.
  static SpacePtr ring(std::size_t cells, std::uint32_t alphabet_size);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(Site s) const { return ids_.at(s); }
  std::uint32_t alphabet_size(Site s) const { return sizes_.at(s); }
  std::optional<Site> find(std::string_view id) const;
  bool is_ring() const { return ring_; }

  // Product of all alphabet sizes, or nullopt once it no longer fits 64 bits.
  std::optional<std::uint64_t> total_dim() const;
  double log2_dim() const { return log2_dim_; }
  bool enumerable() const;
  // Throws DimensionCapExceeded unless the space can be enumerated.
  std::uint64_t require_enumerable(std::string_view what) const;

  std::uint64_t stride(Site s) const { return strides_.at(s); }
  Letter digit(std::uint64_t index, Site s) const {
    return static_cast<Letter>((index / strides_[s]) % sizes_[s]);
  }
  std::uint64_t encode(std::span<const Letter> letters) const;
  std::vector<Letter> decode(std::uint64_t index) const;

  bool same_as(const CellSpace& other) const;

  // Sub-space made of the given sites, in the given order.
  SpacePtr subspace(std::span<const Site> sites) const;

 private:
  CellSpace() = default;

  std::vector<std::string> ids_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::uint64_t> strides_;  // saturated once past 64 bits
  std::uint64_t total_dim_ = 1;
  bool dim_overflow_ = false;
  double log2_dim_ = 0.0;
  bool ring_ = false;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, std::string_view what);

// Signed closed interval [lo, hi] of ring positions.
struct Interval {
  long lo = 0;
  long hi = 0;
  bool operator==(const Interval&) const = default;
};

class SiteSet {
 public:
  explicit SiteSet(SpacePtr space);
  SiteSet(SpacePtr space, std::span<const Site> members);

  static SiteSet all(SpacePtr space);
  static SiteSet single(SpacePtr space, Site s);

  const SpacePtr& space() const { return space_; }
  void insert(Site s);
  void erase(Site s);
  bool contains(Site s) const;
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<Site> members() const;

  SiteSet complement() const;
  SiteSet operator|(const SiteSet& other) const;
  SiteSet operator&(const SiteSet& other) const;
  SiteSet operator-(const SiteSet& other) const;
  SiteSet& operator|=(const SiteSet& other);
  bool subset_of(const SiteSet& other) const;
  bool operator==(const SiteSet& other) const;

  // Arc normal form on rings: members equal {lo, lo+1, .., hi} mod n with
  // lo in (-n/2, n/2]. Empty for non-ring spaces, the empty set, and sets
  // that are not a single circular arc. The full ring is [0, n-1].
  std::optional<Interval> arc() const;
  // Arc normal form of the set translated by -origin.
  std::optional<Interval> arc_relative_to(Site origin) const;

 private:
  void check_compatible(const SiteSet& other) const;

  SpacePtr space_;
  std::vector<std::uint64_t> bits_;
};

// Sites lo..hi (mod n) of a ring; lo may be negative.
SiteSet ring_interval(const SpacePtr& ring, long lo, long hi);
// Ring site at signed position p.
Site ring_site(const CellSpace& ring, long p);

std::string format_interval(const Interval& iv);

// Restriction of a word to a subset of its sites.
struct PartialWord {
  SiteSet domain;
  std::vector<Letter> letters;  // one per member, in site order

  PartialWord restrict_to(const SiteSet& subset) const;
  bool operator==(const PartialWord& other) const;
};

class Word {
 public:
  Word(SpacePtr space, std::vector<Letter> letters);

  static Word zero(SpacePtr space);
  static Word from_index(SpacePtr space, std::uint64_t index);

  const SpacePtr& space() const { return space_; }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](Site s) const { return letters_.at(s); }
  Word with(Site s, Letter a) const;
  std::uint64_t index() const;
  PartialWord restrict_to(const SiteSet& subset) const;
  bool operator==(const Word& other) const;

 private:
  SpacePtr space_;
  std::vector<Letter> letters_;
};

}  // namespace qnb
