#pragma once

#include <cassert>
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "bwsd/types.hpp"

namespace bwsd {

/// Symmetric d x d matrix with zero diagonal, stored as the packed strict
/// upper triangle in row-major order.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(doc_t d, std::vector<std::string> names);

  doc_t size() const { return d_; }
  const std::vector<std::string>& names() const { return names_; }

  /// 1-based; get(i, i) == 0 and get(j, i) == get(i, j).
  double get(doc_t i, doc_t j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return values_[index(i, j)];
  }
  void set(doc_t i, doc_t j, double v) {
    assert(i < j);
    values_[index(i, j)] = v;
  }

  /// Entries M[i][i+1..d].
  std::span<double> row(doc_t i) {
    return std::span<double>(values_).subspan(row_offset(i), d_ - i);
  }
  std::span<const double> packed() const { return values_; }

  /// Offset of (i, j), i < j, in the packed triangle.
  std::size_t index(doc_t i, doc_t j) const {
    assert(i >= 1 && i < j && j <= d_);
    return row_offset(i) + (j - i - 1);
  }
  static std::size_t pair_count(doc_t d) {
    return static_cast<std::size_t>(d) * (d - (d > 0 ? 1 : 0)) / 2;
  }

 private:
  std::size_t row_offset(doc_t i) const {
    const std::size_t r = i - 1;
    return r * (2 * static_cast<std::size_t>(d_) - r - 1) / 2;
  }

  doc_t d_ = 0;
  std::vector<double> values_;
  std::vector<std::string> names_;
};

}  // namespace bwsd
