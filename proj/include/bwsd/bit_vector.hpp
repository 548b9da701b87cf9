#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bwsd {

/// Plain bitvector with rank/select support.
///
/// Rank directory: absolute counts per 512-bit superblock plus 16-bit
/// counts per 64-bit word relative to its superblock. Select samples every
/// 256th set (or unset) bit to bracket a binary search over superblocks.
/// Positions are 1-based: rank1(i) counts ones in bits[1..i], select1(k)
/// is the position of the k-th one.
class RsBitvector {
 public:
  RsBitvector() = default;
  /// Bit p (1-based) is set iff p appears in `ones` (strictly increasing).
  RsBitvector(std::span<const std::uint32_t> ones, std::size_t size);
  /// From packed words; bit p lives at word (p-1)/64, offset (p-1)%64.
  RsBitvector(std::vector<std::uint64_t> words, std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t count_ones() const { return ones_; }
  bool operator[](std::size_t pos) const {
    std::size_t b = pos - 1;
    return (words_[b >> 6] >> (b & 63)) & 1;
  }

  std::size_t rank1(std::size_t i) const {
    std::size_t w = i >> 6;
    std::uint64_t mask = (std::uint64_t{1} << (i & 63)) - 1;
    return super_[w >> 3] + block_[w] +
           static_cast<std::size_t>(__builtin_popcountll(words_[w] & mask));
  }
  std::size_t rank0(std::size_t i) const { return i - rank1(i); }

  std::size_t select1(std::size_t k) const;
  std::size_t select0(std::size_t k) const;

  std::size_t bytes() const;

 private:
  template <bool Bit>
  std::size_t select_impl(std::size_t k) const;
  void build_directory();

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  std::vector<std::uint64_t> super_;
  std::vector<std::uint16_t> block_;
  std::vector<std::uint32_t> sample1_;
  std::vector<std::uint32_t> sample0_;
};

}  // namespace bwsd
