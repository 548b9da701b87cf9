#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bwsd/bit_vector.hpp"
#include "bwsd/types.hpp"

namespace bwsd {

/// Balanced wavelet tree over values 1..sigma in levelwise layout: level l
/// holds one bit per element, elements stably ordered by the top l bits of
/// (value - 1). A node is a contiguous range of its level.
class WaveletTree {
 public:
  WaveletTree() = default;
  /// `values` is 0-based storage of the sequence; each value in 1..sigma.
  WaveletTree(std::span<const doc_t> values, doc_t sigma);

  std::size_t size() const { return size_; }
  doc_t sigma() const { return sigma_; }
  unsigned depth() const { return depth_; }

  /// Occurrences of c in positions 1..i.
  std::size_t rank(doc_t c, std::size_t i) const;
  /// Position of the k-th occurrence of c.
  std::size_t select(doc_t c, std::size_t k) const;
  doc_t access(std::size_t pos) const;

  std::size_t bytes() const;

 private:
  bool bit_of(doc_t c, unsigned level) const {
    return ((c - 1) >> (depth_ - 1 - level)) & 1;
  }

  std::size_t size_ = 0;
  doc_t sigma_ = 0;
  unsigned depth_ = 0;
  std::vector<RsBitvector> levels_;
};

}  // namespace bwsd
