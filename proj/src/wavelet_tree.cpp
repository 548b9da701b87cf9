#include "bwsd/wavelet_tree.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace bwsd {

WaveletTree::WaveletTree(std::span<const doc_t> values, doc_t sigma)
    : size_(values.size()), sigma_(sigma) {
  depth_ = sigma <= 1 ? 0 : static_cast<unsigned>(std::bit_width(sigma - 1));
  std::vector<doc_t> cur(values.begin(), values.end());
  std::vector<doc_t> next(cur.size());
  levels_.reserve(depth_);
  for (unsigned level = 0; level < depth_; ++level) {
    std::vector<std::uint64_t> words(size_ / 64 + 1, 0);
    for (std::size_t k = 0; k < size_; ++k) {
      assert(cur[k] >= 1 && cur[k] <= sigma_);
      if (bit_of(cur[k], level)) words[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
    levels_.emplace_back(std::move(words), size_);

    // Stable partition of every node by this level's bit.
    const unsigned shift = depth_ - level;
    std::size_t begin = 0;
    while (begin < size_) {
      const doc_t prefix = shift >= 32 ? 0 : (cur[begin] - 1) >> shift;
      std::size_t end = begin;
      while (end < size_ &&
             (shift >= 32 ? 0 : (cur[end] - 1) >> shift) == prefix) {
        ++end;
      }
      std::size_t out = begin;
      for (std::size_t k = begin; k < end; ++k) {
        if (!bit_of(cur[k], level)) next[out++] = cur[k];
      }
      for (std::size_t k = begin; k < end; ++k) {
        if (bit_of(cur[k], level)) next[out++] = cur[k];
      }
      begin = end;
    }
    cur.swap(next);
  }
}

std::size_t WaveletTree::rank(doc_t c, std::size_t i) const {
  assert(c >= 1 && c <= sigma_ && i <= size_);
  std::size_t begin = 0, end = size_;  // node range, 0-based half-open
  std::size_t count = i;               // prefix length inside the node
  for (unsigned level = 0; level < depth_ && count > 0; ++level) {
    const RsBitvector& bv = levels_[level];
    const std::size_t ones_before = bv.rank1(begin);
    const std::size_t node_ones = bv.rank1(end) - ones_before;
    const std::size_t zeros = (end - begin) - node_ones;
    const std::size_t prefix_ones = bv.rank1(begin + count) - ones_before;
    if (bit_of(c, level)) {
      begin += zeros;
      count = prefix_ones;
    } else {
      end = begin + zeros;
      count -= prefix_ones;
    }
  }
  return count;
}

std::size_t WaveletTree::select(doc_t c, std::size_t k) const {
  assert(c >= 1 && c <= sigma_);
  std::vector<std::size_t> begins(depth_);
  std::size_t begin = 0, end = size_;
  for (unsigned level = 0; level < depth_; ++level) {
    begins[level] = begin;
    const RsBitvector& bv = levels_[level];
    const std::size_t zeros = (end - begin) - (bv.rank1(end) - bv.rank1(begin));
    if (bit_of(c, level)) {
      begin += zeros;
    } else {
      end = begin + zeros;
    }
  }
  if (k == 0 || k > end - begin) {
    throw std::out_of_range("select past last occurrence");
  }
  std::size_t pos = k - 1;  // 0-based offset inside the current node
  for (unsigned level = depth_; level-- > 0;) {
    const RsBitvector& bv = levels_[level];
    const std::size_t b = begins[level];
    std::size_t global;
    if (bit_of(c, level)) {
      global = bv.select1(bv.rank1(b) + pos + 1) - 1;
    } else {
      global = bv.select0(bv.rank0(b) + pos + 1) - 1;
    }
    pos = global - b;
  }
  return pos + 1;
}

doc_t WaveletTree::access(std::size_t pos) const {
  std::size_t begin = 0, end = size_;
  std::size_t p = pos - 1;
  doc_t value = 0;
  for (unsigned level = 0; level < depth_; ++level) {
    const RsBitvector& bv = levels_[level];
    const std::size_t ones_before = bv.rank1(begin);
    const std::size_t zeros = (end - begin) - (bv.rank1(end) - ones_before);
    if (bv[begin + p + 1]) {
      p = bv.rank1(begin + p) - ones_before;
      begin += zeros;
      value = (value << 1) | 1;
    } else {
      p -= bv.rank1(begin + p) - ones_before;
      end = begin + zeros;
      value <<= 1;
    }
  }
  return value + 1;
}

std::size_t WaveletTree::bytes() const {
  std::size_t total = 0;
  for (const auto& bv : levels_) total += bv.bytes();
  return total;
}

}  // namespace bwsd
