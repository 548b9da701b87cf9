#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace bwsd {

enum class Measure { expectation, entropy };

/// t_k for one run length k.
struct RunCount {
  std::uint32_t length;
  std::uint64_t count;

  friend bool operator==(const RunCount&, const RunCount&) = default;
};

/// Run-length histogram of one α bitvector: t_k for k >= 1, the number of
/// runs s and the covered length sum k * t_k.
///
/// Dense counters up to k_max_bound; a touched list makes clear() cost
/// O(distinct lengths) so a scratch histogram can be reused across pairs.
class RunHistogram {
 public:
  RunHistogram() = default;
  explicit RunHistogram(std::uint32_t k_max_bound)
      : counts_(static_cast<std::size_t>(k_max_bound) + 1, 0) {}

  void add_run(std::uint32_t length, std::uint64_t times = 1) {
    assert(length >= 1 && length < counts_.size());
    if (counts_[length] == 0) touched_.push_back(length);
    counts_[length] += times;
    runs_ += times;
    mass_ += static_cast<std::uint64_t>(length) * times;
  }

  void clear() {
    for (std::uint32_t k : touched_) counts_[k] = 0;
    touched_.clear();
    runs_ = 0;
    mass_ = 0;
  }

  std::uint32_t k_max_bound() const {
    return counts_.empty() ? 0 : static_cast<std::uint32_t>(counts_.size() - 1);
  }
  std::uint64_t count(std::uint32_t length) const {
    return length < counts_.size() ? counts_[length] : 0;
  }
  /// s, the number of runs.
  std::uint64_t runs() const { return runs_; }
  /// Sum of k * t_k; equals the length of the α bitvector.
  std::uint64_t mass() const { return mass_; }
  std::size_t distinct_lengths() const { return touched_.size(); }

  /// Nonzero counters in increasing run length.
  std::vector<RunCount> entries() const;

 private:
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint32_t> touched_;
  std::uint64_t runs_ = 0;
  std::uint64_t mass_ = 0;
};

/// Histogram of maximal runs (of either bit) in a nonempty 0/1 sequence.
RunHistogram runs_from_alpha(std::span<const std::uint8_t> alpha);
/// Same, accumulating into `out` (which must be cleared and large enough).
void runs_from_alpha(std::span<const std::uint8_t> alpha, RunHistogram& out);

// Measures over histogram entries. `entries` must be sorted by length so
// that results are bit-identical whichever engine produced them.

/// D_M = E(k) - 1.
double measure_expectation(std::span<const RunCount> entries);
/// D_E = -sum (t_k/s) lg(t_k/s).
double measure_entropy(std::span<const RunCount> entries);
double measure(Measure m, std::span<const RunCount> entries);

double measure_expectation(const RunHistogram& h);
double measure_entropy(const RunHistogram& h);

/// P(k) = t_k / s for each k with t_k > 0, parallel to `entries`.
std::vector<double> distribution(std::span<const RunCount> entries);

}  // namespace bwsd
