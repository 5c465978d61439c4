#pragma once

#include <cstdint>
#include <vector>

#include "qnb/cellspace.hpp"

namespace qnb::detail {

// Compact mixed-radix index of the restriction of a word to a site subset.
class Projection {
 public:
  Projection(const CellSpace& space, const SiteSet& subset) {
    std::uint64_t stride = 1;
    for (Site s : subset.members()) {
      parts_.push_back({space.stride(s), space.alphabet_size(s), stride});
      stride *= space.alphabet_size(s);
    }
    size_ = stride;
  }

  // Number of distinct restrictions.
  std::uint64_t size() const { return size_; }

  std::uint64_t operator()(std::uint64_t index) const {
    std::uint64_t out = 0;
    for (const auto& p : parts_) out += ((index / p.source_stride) % p.radix) * p.stride;
    return out;
  }

 private:
  struct Part {
    std::uint64_t source_stride;
    std::uint64_t radix;
    std::uint64_t stride;
  };
  std::vector<Part> parts_;
  std::uint64_t size_ = 1;
};

}  // namespace qnb::detail
