#pragma once

#include <bit>
#include <cassert>
#include <span>
#include <vector>

#include "bwsd/types.hpp"

namespace bwsd {

enum class Extremum { min, max };

/// Sparse table answering range-min or range-max queries in O(1) with
/// O(N lg N) words. Queries return the position of the extremum; ties go
/// to the smallest position.
class RangeExtremumIndex {
 public:
  RangeExtremumIndex() = default;

  /// `values[1..N]` (slot 0 ignored). The array must outlive the index.
  RangeExtremumIndex(std::span<const pos_t> values, Extremum mode)
      : values_(values), mode_(mode) {
    const std::size_t n = values.size() - 1;
    table_.emplace_back(n + 1);
    for (std::size_t i = 1; i <= n; ++i) table_[0][i] = static_cast<pos_t>(i);
    for (std::size_t width = 2; width <= n; width *= 2) {
      const auto& prev = table_.back();
      std::vector<pos_t> cur(n - width + 2);
      for (std::size_t i = 1; i + width - 1 <= n; ++i) {
        cur[i] = pick(prev[i], prev[i + width / 2]);
      }
      table_.push_back(std::move(cur));
    }
  }

  Extremum mode() const { return mode_; }

  /// Position of the extremum of values[l..r], 1 <= l <= r <= N.
  pos_t query(pos_t l, pos_t r) const {
    assert(l >= 1 && l <= r && r < values_.size());
    const unsigned level = std::bit_width(r - l + 1) - 1;
    const auto& row = table_[level];
    return pick(row[l], row[r - (pos_t{1} << level) + 1]);
  }

 private:
  pos_t pick(pos_t a, pos_t b) const {
    // Ties keep a, the left argument.
    if (mode_ == Extremum::min) return values_[b] < values_[a] ? b : a;
    return values_[b] > values_[a] ? b : a;
  }

  std::span<const pos_t> values_;
  Extremum mode_ = Extremum::min;
  std::vector<std::vector<pos_t>> table_;
};

}  // namespace bwsd
