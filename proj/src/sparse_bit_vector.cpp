#include "bwsd/sparse_bit_vector.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace bwsd {

SparseBitvector::SparseBitvector(std::span<const std::uint32_t> ones,
                                 std::size_t size)
    : size_(size), ones_(ones.size()) {
  if (ones_ > 0 && size_ > ones_) {
    low_width_ = static_cast<unsigned>(std::bit_width(size_ / ones_) - 1);
  }
  low_mask_ = low_width_ == 0 ? 0 : (std::uint64_t{1} << low_width_) - 1;
  low_.assign((ones_ * low_width_) / 64 + 2, 0);

  const std::size_t buckets = size_ == 0 ? 0 : ((size_ - 1) >> low_width_) + 1;
  const std::size_t high_bits = ones_ + buckets;
  std::vector<std::uint64_t> high(high_bits / 64 + 1, 0);
  for (std::size_t k = 0; k < ones_; ++k) {
    assert(ones[k] >= 1 && ones[k] <= size_);
    assert(k == 0 || ones[k] > ones[k - 1]);
    std::uint64_t x = ones[k] - 1;
    if (low_width_ > 0) {
      std::size_t bit = k * low_width_;
      std::uint64_t v = x & low_mask_;
      low_[bit >> 6] |= v << (bit & 63);
      if ((bit & 63) + low_width_ > 64) {
        low_[(bit >> 6) + 1] |= v >> (64 - (bit & 63));
      }
    }
    std::size_t hb = (x >> low_width_) + k;
    high[hb >> 6] |= std::uint64_t{1} << (hb & 63);
  }
  high_ = RsBitvector(std::move(high), high_bits);
}

std::size_t SparseBitvector::rank1(std::size_t i) const {
  if (i >= size_) return ones_;
  // Count elements x = pos - 1 with x < i.
  const std::size_t h = i >> low_width_;
  const std::uint64_t lo = i & low_mask_;
  std::size_t k = h == 0 ? 0 : high_.select0(h) - h;
  // Elements of bucket h occupy bits h + k, h + k + 1, ... while set.
  while (k < ones_ && high_[h + k + 1] && low(k) < lo) ++k;
  return k;
}

std::size_t SparseBitvector::select1(std::size_t k) const {
  if (k == 0 || k > ones_) throw std::out_of_range("select1 past last one");
  std::uint64_t h = high_.select1(k) - k;
  return static_cast<std::size_t>(((h << low_width_) | low(k - 1)) + 1);
}

}  // namespace bwsd
