#include "qnb/cellspace.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "qnb/error.hpp"

namespace qnb {

namespace {

std::atomic<std::uint64_t> g_enumeration_cap{std::uint64_t{1} << 22};

constexpr std::size_t kWordBits = 64;

}  // namespace

std::uint64_t enumeration_cap() { return g_enumeration_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "enumeration cap must be positive");
  g_enumeration_cap.store(cap, std::memory_order_relaxed);
}

SpacePtr CellSpace::make(std::vector<SiteSpec> sites) {
  auto space = std::shared_ptr<CellSpace>(new CellSpace());
  std::unordered_set<std::string> seen;
  space->ids_.reserve(sites.size());
  for (auto& spec : sites) {
    if (spec.alphabet_size < 1) {
      throw Error(ErrorKind::InvalidAlphabet, "site '" + spec.id + "' has an empty alphabet");
    }
    if (!seen.insert(spec.id).second) {
      throw Error(ErrorKind::DuplicateSite, "site '" + spec.id + "' listed twice");
    }
    space->strides_.push_back(space->dim_overflow_ ? 0 : space->total_dim_);
    if (!space->dim_overflow_) {
      unsigned __int128 next =
          static_cast<unsigned __int128>(space->total_dim_) * spec.alphabet_size;
      if (next > UINT64_MAX) {
        space->dim_overflow_ = true;
        space->total_dim_ = UINT64_MAX;
      } else {
        space->total_dim_ = static_cast<std::uint64_t>(next);
      }
    }
    space->log2_dim_ += std::log2(static_cast<double>(spec.alphabet_size));
    space->ids_.push_back(std::move(spec.id));
    space->sizes_.push_back(spec.alphabet_size);
  }
  return space;
}

SpacePtr CellSpace::ring(std::size_t cells, std::uint32_t alphabet_size) {
  std::vector<SiteSpec> specs;
  specs.reserve(cells);
  for (std::size_t n = 0; n < cells; ++n) specs.push_back({std::to_string(n), alphabet_size});
  auto space = std::const_pointer_cast<CellSpace>(make(std::move(specs)));
  space->ring_ = true;
  return space;
}

std::optional<Site> CellSpace::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<Site>(it - ids_.begin());
}

std::optional<std::uint64_t> CellSpace::total_dim() const {
  if (dim_overflow_) return std::nullopt;
  return total_dim_;
}

bool CellSpace::enumerable() const { return !dim_overflow_ && total_dim_ <= enumeration_cap(); }

std::uint64_t CellSpace::require_enumerable(std::string_view what) const {
  if (!enumerable()) {
    throw Error(ErrorKind::DimensionCapExceeded,
                std::string(what) + " needs to enumerate 2^" + std::to_string(log2_dim_) +
                    " words, above the cap of " + std::to_string(enumeration_cap()));
  }
  return total_dim_;
}

std::uint64_t CellSpace::encode(std::span<const Letter> letters) const {
  if (letters.size() != size()) {
    throw Error(ErrorKind::ArityMismatch, "word has " + std::to_string(letters.size()) +
                                              " letters, space has " + std::to_string(size()) +
                                              " sites");
  }
  if (dim_overflow_) {
    throw Error(ErrorKind::DimensionCapExceeded, "word index does not fit 64 bits");
  }
  std::uint64_t index = 0;
  for (Site s = 0; s < size(); ++s) {
    if (letters[s] >= sizes_[s]) {
      throw Error(ErrorKind::ArityMismatch, "letter out of range at site '" + ids_[s] + "'");
    }
    index += strides_[s] * letters[s];
  }
  return index;
}

std::vector<Letter> CellSpace::decode(std::uint64_t index) const {
  if (dim_overflow_) {
    throw Error(ErrorKind::DimensionCapExceeded, "word index does not fit 64 bits");
  }
  if (index >= total_dim_) throw Error(ErrorKind::ArityMismatch, "word index out of range");
  std::vector<Letter> letters(size());
  for (Site s = 0; s < size(); ++s) letters[s] = digit(index, s);
  return letters;
}

bool CellSpace::same_as(const CellSpace& other) const {
  return this == &other || (ids_ == other.ids_ && sizes_ == other.sizes_ && ring_ == other.ring_);
}

SpacePtr CellSpace::subspace(std::span<const Site> sites) const {
  std::vector<SiteSpec> specs;
  for (Site s : sites) specs.push_back({ids_.at(s), sizes_.at(s)});
  return make(std::move(specs));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, std::string_view what) {
  if (!same_space(a, b)) throw Error(ErrorKind::SpaceMismatch, std::string(what));
}

// ---------------------------------------------------------------------------

SiteSet::SiteSet(SpacePtr space)
    : space_(std::move(space)), bits_((space_->size() + kWordBits - 1) / kWordBits, 0) {}

SiteSet::SiteSet(SpacePtr space, std::span<const Site> members) : SiteSet(std::move(space)) {
  for (Site s : members) insert(s);
}

SiteSet SiteSet::all(SpacePtr space) {
  SiteSet set(std::move(space));
  for (Site s = 0; s < set.space_->size(); ++s) set.insert(s);
  return set;
}

SiteSet SiteSet::single(SpacePtr space, Site s) {
  SiteSet set(std::move(space));
  set.insert(s);
  return set;
}

void SiteSet::insert(Site s) {
  if (s >= space_->size()) throw Error(ErrorKind::ArityMismatch, "site index out of range");
  bits_[s / kWordBits] |= std::uint64_t{1} << (s % kWordBits);
}

void SiteSet::erase(Site s) {
  if (s >= space_->size()) throw Error(ErrorKind::ArityMismatch, "site index out of range");
  bits_[s / kWordBits] &= ~(std::uint64_t{1} << (s % kWordBits));
}

bool SiteSet::contains(Site s) const {
  return s < space_->size() && ((bits_[s / kWordBits] >> (s % kWordBits)) & 1U);
}

std::size_t SiteSet::count() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Site> SiteSet::members() const {
  std::vector<Site> out;
  for (Site s = 0; s < space_->size(); ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

void SiteSet::check_compatible(const SiteSet& other) const {
  require_same_space(space_, other.space_, "site sets live on different cell spaces");
}

SiteSet SiteSet::complement() const {
  SiteSet out(space_);
  for (Site s = 0; s < space_->size(); ++s) {
    if (!contains(s)) out.insert(s);
  }
  return out;
}

SiteSet SiteSet::operator|(const SiteSet& other) const {
  SiteSet out = *this;
  out |= other;
  return out;
}

SiteSet& SiteSet::operator|=(const SiteSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

SiteSet SiteSet::operator&(const SiteSet& other) const {
  check_compatible(other);
  SiteSet out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= other.bits_[i];
  return out;
}

SiteSet SiteSet::operator-(const SiteSet& other) const {
  check_compatible(other);
  SiteSet out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= ~other.bits_[i];
  return out;
}

bool SiteSet::subset_of(const SiteSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

bool SiteSet::operator==(const SiteSet& other) const {
  return same_space(space_, other.space_) && bits_ == other.bits_;
}

namespace {

std::optional<Interval> arc_of(const std::vector<bool>& in, std::size_t count) {
  const long n = static_cast<long>(in.size());
  if (count == 0) return std::nullopt;
  if (static_cast<long>(count) == n) return Interval{0, n - 1};
  long start = -1;
  for (long s = 0; s < n; ++s) {
    if (in[s] && !in[(s + n - 1) % n]) {
      if (start >= 0) return std::nullopt;  // two runs
      start = s;
    }
  }
  long lo = start <= n / 2 ? start : start - n;
  return Interval{lo, lo + static_cast<long>(count) - 1};
}

}  // namespace

std::optional<Interval> SiteSet::arc() const { return arc_relative_to(0); }

std::optional<Interval> SiteSet::arc_relative_to(Site origin) const {
  if (!space_->is_ring()) return std::nullopt;
  const std::size_t n = space_->size();
  std::vector<bool> shifted(n, false);
  std::size_t count = 0;
  for (Site s = 0; s < n; ++s) {
    if (contains(s)) {
      shifted[(s + n - origin % n) % n] = true;
      ++count;
    }
  }
  return arc_of(shifted, count);
}

Site ring_site(const CellSpace& ring, long p) {
  const long n = static_cast<long>(ring.size());
  return static_cast<Site>(((p % n) + n) % n);
}

SiteSet ring_interval(const SpacePtr& ring, long lo, long hi) {
  if (!ring->is_ring()) throw Error(ErrorKind::SpaceMismatch, "interval requested on a non-ring space");
  SiteSet set(ring);
  for (long p = lo; p <= hi; ++p) set.insert(ring_site(*ring, p));
  return set;
}

std::string format_interval(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

// ---------------------------------------------------------------------------

PartialWord PartialWord::restrict_to(const SiteSet& subset) const {
  if (!subset.subset_of(domain)) {
    throw Error(ErrorKind::SpaceMismatch, "restriction to a set outside the word's domain");
  }
  PartialWord out{subset, {}};
  std::size_t k = 0;
  for (Site s : domain.members()) {
    if (subset.contains(s)) out.letters.push_back(letters[k]);
    ++k;
  }
  return out;
}

bool PartialWord::operator==(const PartialWord& other) const {
  return domain == other.domain && letters == other.letters;
}

Word::Word(SpacePtr space, std::vector<Letter> letters)
    : space_(std::move(space)), letters_(std::move(letters)) {
  if (letters_.size() != space_->size()) {
    throw Error(ErrorKind::ArityMismatch, "word has " + std::to_string(letters_.size()) +
                                              " letters for " + std::to_string(space_->size()) +
                                              " sites");
  }
  for (Site s = 0; s < letters_.size(); ++s) {
    if (letters_[s] >= space_->alphabet_size(s)) {
      throw Error(ErrorKind::ArityMismatch, "letter out of range at site '" + space_->id(s) + "'");
    }
  }
}

Word Word::zero(SpacePtr space) {
  std::vector<Letter> letters(space->size(), 0);
  return Word(std::move(space), std::move(letters));
}

Word Word::from_index(SpacePtr space, std::uint64_t index) {
  auto letters = space->decode(index);
  return Word(std::move(space), std::move(letters));
}

Word Word::with(Site s, Letter a) const {
  auto letters = letters_;
  letters.at(s) = a;
  return Word(space_, std::move(letters));
}

std::uint64_t Word::index() const { return space_->encode(letters_); }

PartialWord Word::restrict_to(const SiteSet& subset) const {
  require_same_space(space_, subset.space(), "restriction set on a different space");
  PartialWord out{subset, {}};
  for (Site s : subset.members()) out.letters.push_back(letters_[s]);
  return out;
}

bool Word::operator==(const Word& other) const {
  return same_space(space_, other.space_) && letters_ == other.letters_;
}

}  // namespace qnb
