#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwsd/bwsd_core.hpp"
#include "bwsd/corpus.hpp"
#include "bwsd/distance_matrix.hpp"
#include "bwsd/doc_index.hpp"
#include "bwsd/suffix.hpp"

namespace bwsd {

enum class EngineKind { sf, bit, bit_sd, wt, rmq, rmq_light };

inline constexpr std::array<EngineKind, 6> kAllEngines = {
    EngineKind::sf,  EngineKind::bit, EngineKind::bit_sd,
    EngineKind::wt,  EngineKind::rmq, EngineKind::rmq_light};

/// "sf", "bit", "bit-sd", "wt", "rmq", "rmq-light".
std::string_view engine_name(EngineKind engine);
std::optional<EngineKind> parse_engine_name(std::string_view name);

struct EngineConfig {
  EngineKind engine = EngineKind::bit_sd;
  Measure measure = Measure::expectation;
  unsigned threads = 1;
  // Shortcuts of the select/rank engines. Neither changes the output.
  bool cache_ranks = true;
  bool skip_by_next_hint = true;
  // Keep every pair's histogram in the result.
  bool keep_histograms = false;
};

struct EngineStats {
  std::uint64_t listing_reports = 0;
  std::uint64_t rank_calls = 0;
  std::uint64_t select_calls = 0;
  double build_seconds = 0.0;
  double compute_seconds = 0.0;

  void add_counters(const EngineStats& other) {
    listing_reports += other.listing_reports;
    rank_calls += other.rank_calls;
    select_calls += other.select_calls;
  }
};

/// "key=value" lines.
void write_stats(const EngineStats& stats, std::ostream& out);

struct EngineResult {
  DistanceMatrix matrix;
  EngineStats stats;
  // Packed like the matrix triangle; filled when keep_histograms is set.
  std::vector<std::vector<RunCount>> histograms;

  const std::vector<RunCount>& histogram(doc_t i, doc_t j) const {
    if (i > j) std::swap(i, j);
    return histograms.at(matrix.index(i, j));
  }
};

/// Builds whatever cfg.engine needs from the collection and runs it.
EngineResult run_engine(const TextCollection& collection,
                        const EngineConfig& cfg);

/// Runs a DA-based engine directly on a document array. sf needs the texts
/// and is rejected with std::invalid_argument.
EngineResult run_engine(const DocumentArray& da, const EngineConfig& cfg,
                        std::vector<std::string> names = {});

/// Per pair: suffix-sort the two-document collection and count α's runs.
EngineResult engine_sf(const TextCollection& collection,
                       const EngineConfig& cfg);

/// Row by row over a global DA: intervals between consecutive occurrences
/// of i are found by select, occurrences of j inside them by rank.
EngineResult engine_alg1(const DocumentArray& da, const EngineConfig& cfg,
                         DocIndexFlavor flavor,
                         std::vector<std::string> names = {});

/// Sweep of all intervals between consecutive occurrences with document
/// listing; runs accumulate in a store shared by unordered pairs.
EngineResult engine_alg2(const DocumentArray& da, const EngineConfig& cfg,
                         std::vector<std::string> names = {});

/// The interval sweep one row at a time, without the pair store.
EngineResult engine_alg2_light(const DocumentArray& da,
                               const EngineConfig& cfg,
                               std::vector<std::string> names = {});

}  // namespace bwsd
