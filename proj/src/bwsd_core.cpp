#include "bwsd/bwsd_core.hpp"

#include <algorithm>
#include <cmath>

namespace bwsd {

std::vector<RunCount> RunHistogram::entries() const {
  std::vector<std::uint32_t> keys(touched_);
  std::sort(keys.begin(), keys.end());
  std::vector<RunCount> out;
  out.reserve(keys.size());
  for (std::uint32_t k : keys) out.push_back({k, counts_[k]});
  return out;
}

void runs_from_alpha(std::span<const std::uint8_t> alpha, RunHistogram& out) {
  assert(!alpha.empty());
  std::uint32_t run = 1;
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    if (alpha[i] == alpha[i - 1]) {
      ++run;
    } else {
      out.add_run(run);
      run = 1;
    }
  }
  out.add_run(run);
}

RunHistogram runs_from_alpha(std::span<const std::uint8_t> alpha) {
  RunHistogram h(static_cast<std::uint32_t>(alpha.size()));
  runs_from_alpha(alpha, h);
  return h;
}

double measure_expectation(std::span<const RunCount> entries) {
  std::uint64_t runs = 0, mass = 0;
  for (const auto& e : entries) {
    runs += e.count;
    mass += static_cast<std::uint64_t>(e.length) * e.count;
  }
  assert(runs > 0);
  return static_cast<double>(mass) / static_cast<double>(runs) - 1.0;
}

double measure_entropy(std::span<const RunCount> entries) {
  std::uint64_t runs = 0;
  for (const auto& e : entries) runs += e.count;
  assert(runs > 0);
  const double s = static_cast<double>(runs);
  double h = 0.0;
  for (const auto& e : entries) {
    const double p = static_cast<double>(e.count) / s;
    h -= p * std::log2(p);
  }
  // A single run length gives -1 * lg 1 = -0.0.
  return h == 0.0 ? 0.0 : h;
}

double measure(Measure m, std::span<const RunCount> entries) {
  return m == Measure::expectation ? measure_expectation(entries)
                                   : measure_entropy(entries);
}

double measure_expectation(const RunHistogram& h) {
  return measure_expectation(h.entries());
}

double measure_entropy(const RunHistogram& h) {
  return measure_entropy(h.entries());
}

std::vector<double> distribution(std::span<const RunCount> entries) {
  std::uint64_t runs = 0;
  for (const auto& e : entries) runs += e.count;
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    out.push_back(static_cast<double>(e.count) / static_cast<double>(runs));
  }
  return out;
}

}  // namespace bwsd
