#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bwsd/bit_vector.hpp"

namespace bwsd {

/// Elias-Fano encoded bitvector: m set positions in a universe of n take
/// about m * (2 + lg(n/m)) bits. Same 1-based rank/select contract as
/// RsBitvector.
class SparseBitvector {
 public:
  SparseBitvector() = default;
  /// `ones` strictly increasing, each in [1, size].
  SparseBitvector(std::span<const std::uint32_t> ones, std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t count_ones() const { return ones_; }
  unsigned low_width() const { return low_width_; }

  std::size_t rank1(std::size_t i) const;
  std::size_t select1(std::size_t k) const;

  std::size_t bytes() const { return low_.size() * 8 + high_.bytes(); }

 private:
  std::uint64_t low(std::size_t k) const {
    if (low_width_ == 0) return 0;
    std::size_t bit = k * low_width_;
    std::size_t w = bit >> 6;
    unsigned off = bit & 63;
    std::uint64_t v = low_[w] >> off;
    if (off + low_width_ > 64) v |= low_[w + 1] << (64 - off);
    return v & low_mask_;
  }

  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  unsigned low_width_ = 0;
  std::uint64_t low_mask_ = 0;
  std::vector<std::uint64_t> low_;
  // Element k (0-based) with high part h sets bit h + k (0-based).
  RsBitvector high_;
};

}  // namespace bwsd
