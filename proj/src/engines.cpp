#include "bwsd/engines.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "bwsd/document_listing.hpp"
#include "bwsd/parallel.hpp"

namespace bwsd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Folds finished pair histograms into the matrix. Rows are disjoint, so
// workers write without synchronization.
class PairSink {
 public:
  PairSink(EngineResult& result, const EngineConfig& cfg,
           std::span<const pos_t> doc_len)
      : result_(result), cfg_(cfg), doc_len_(doc_len) {
    if (cfg.keep_histograms) {
      result_.histograms.resize(
          DistanceMatrix::pair_count(result_.matrix.size()));
    }
  }

  void emit(doc_t i, doc_t j, std::vector<RunCount> entries) {
#ifndef NDEBUG
    std::uint64_t mass = 0;
    for (const auto& e : entries) mass += std::uint64_t{e.length} * e.count;
    assert(mass == std::uint64_t{doc_len_[i]} + doc_len_[j]);
#endif
    result_.matrix.set(i, j, measure(cfg_.measure, entries));
    if (cfg_.keep_histograms) {
      result_.histograms[result_.matrix.index(i, j)] = std::move(entries);
    }
  }

 private:
  EngineResult& result_;
  const EngineConfig& cfg_;
  std::span<const pos_t> doc_len_;
};

std::vector<std::string> names_or_default(std::vector<std::string> names,
                                          doc_t d) {
  if (names.empty()) {
    for (doc_t i = 1; i <= d; ++i) names.push_back(std::to_string(i));
  }
  return names;
}

pos_t max_length(std::span<const pos_t> doc_len) {
  return doc_len.size() <= 1 ? 0 : *std::max_element(doc_len.begin() + 1,
                                                     doc_len.end());
}

void check_config(const EngineConfig& cfg) {
  if (cfg.threads == 0) throw std::invalid_argument("threads must be >= 1");
}

// ---------------------------------------------------------------------------
// SF

struct SfState {
  RunHistogram hist;
  std::vector<std::uint8_t> alpha;
};

// ---------------------------------------------------------------------------
// select/rank engines (bit, bit-sd, wt)

struct Alg1State {
  RunHistogram hist;
  std::vector<pos_t> ends;
  EngineStats stats;
};

// Row i. For each j > i the intervals (q_s, q_e] between
// consecutive occurrences of i are visited in order. A nonzero count k of
// j in an interval closes the pending 0-run (occurrences of i since the
// last j) and records a 1-run of length k; the half-open first interval
// (0, first] captures j's before the first i and the final (last, N]
// captures trailing j's.
template <class Index>
void alg1_row(const Index& idx, const OccIndex& occ, doc_t i,
              const EngineConfig& cfg, Alg1State& st, PairSink& sink) {
  const pos_t n = static_cast<pos_t>(idx.size());
  const doc_t d = idx.documents();
  const std::size_t ni = idx.count(i);

  st.ends.resize(ni);
  for (std::size_t p = 1; p <= ni; ++p) {
    st.ends[p - 1] = static_cast<pos_t>(idx.select(i, p));
  }
  st.stats.select_calls += ni;

  const bool hint = cfg.skip_by_next_hint;
  const bool cache = cfg.cache_ranks;
  for (doc_t j = i + 1; j <= d; ++j) {
    const auto occ_j = occ.occurrences(j);
    RunHistogram& hist = st.hist;
    hist.clear();
    std::uint64_t rank_calls = 0;
    std::uint32_t zero_run = 0;
    std::size_t rank_start = 0;  // rank of j at q_s
    pos_t next_j = occ_j.empty() ? n + 1 : occ_j[0];
    pos_t q_s = 0;

    auto interval = [&](pos_t q_e) {
      std::size_t k = 0;
      if (!hint || next_j <= q_e) {
        const std::size_t rank_end = idx.rank(j, q_e);
        ++rank_calls;
        if (!cache) {
          rank_start = idx.rank(j, q_s);
          ++rank_calls;
        }
        k = rank_end - rank_start;
        rank_start = rank_end;
        if (hint) next_j = rank_end < occ_j.size() ? occ_j[rank_end] : n + 1;
      }
      if (k > 0) {
        if (zero_run > 0) hist.add_run(zero_run);
        hist.add_run(static_cast<std::uint32_t>(k));
        zero_run = 0;
      }
      q_s = q_e;
    };

    for (pos_t q_e : st.ends) {
      interval(q_e);
      ++zero_run;
    }
    interval(n);
    if (zero_run > 0) hist.add_run(zero_run);

    st.stats.rank_calls += rank_calls;
    sink.emit(i, j, hist.entries());
  }
}

template <class Index>
void alg1_compute(const Index& idx, const OccIndex& occ,
                  const EngineConfig& cfg, pos_t bound, PairSink& sink,
                  EngineStats& stats) {
  auto states = run_parallel(
      idx.documents(), cfg.threads,
      [&] { return Alg1State{RunHistogram(bound), {}, {}}; },
      [&](Alg1State& st, doc_t i) { alg1_row(idx, occ, i, cfg, st, sink); });
  for (const auto& st : states) stats.add_counters(st.stats);
}

// ---------------------------------------------------------------------------
// interval sweep with document listing (rmq, rmq-light)

// Small unsorted histogram; run lengths per pair are few.
struct SparseCounts {
  std::vector<RunCount> items;

  void add(std::uint32_t length, std::uint64_t times = 1) {
    for (auto& it : items) {
      if (it.length == length) {
        it.count += times;
        return;
      }
    }
    items.push_back({length, times});
  }
};

struct Alg2State {
  explicit Alg2State(doc_t d) : ws(d) {}
  std::unordered_map<std::size_t, SparseCounts> store;
  ListingWorkspace ws;
  std::vector<ListedDoc> listed;
  EngineStats stats;
};

struct Alg2LightState {
  Alg2LightState(doc_t d, pos_t bound)
      : hist(d + 1, RunHistogram(bound)), last_seen(d + 1, kUnseen), ws(d) {}
  static constexpr pos_t kUnseen = std::numeric_limits<pos_t>::max();
  std::vector<RunHistogram> hist;
  std::vector<pos_t> last_seen;
  ListingWorkspace ws;
  std::vector<ListedDoc> listed;
  EngineStats stats;
};

// Calls fn(p, q_s, q_e) for the n_i + 1 intervals of document i: the
// leading one from the virtual position 0 to the first occurrence, then
// q_e = next[q_s] for every occurrence q_s (the last ends at N + 1).
template <class Fn>
void for_each_interval(const OccIndex& occ, doc_t i, Fn&& fn) {
  const auto occ_i = occ.occurrences(i);
  pos_t q_s = 0;
  for (std::size_t p = 0; p <= occ_i.size(); ++p) {
    const pos_t q_e = p == 0 ? occ_i[0] : occ.next[q_s];
    fn(p, q_s, q_e);
    q_s = q_e;
  }
}

EngineResult make_result(const DocumentArray& da,
                         std::vector<std::string> names) {
  EngineResult result;
  result.matrix = DistanceMatrix(da.d, names_or_default(std::move(names), da.d));
  return result;
}

void check_da(const DocumentArray& da) {
  if (da.d == 0) throw std::invalid_argument("no documents");
  if (da.size() + 2 > std::numeric_limits<pos_t>::max()) {
    throw std::length_error("document array too large");
  }
  for (pos_t i = 1; i <= da.size(); ++i) {
    if (da.da[i] == 0 || da.da[i] > da.d) {
      throw std::invalid_argument("DA value outside 1..d");
    }
  }
  const auto counts = da.counts();
  for (doc_t c = 1; c <= da.d; ++c) {
    if (counts[c] == 0) throw std::invalid_argument("a document never occurs in DA");
  }
}

}  // namespace

std::string_view engine_name(EngineKind engine) {
  switch (engine) {
    case EngineKind::sf: return "sf";
    case EngineKind::bit: return "bit";
    case EngineKind::bit_sd: return "bit-sd";
    case EngineKind::wt: return "wt";
    case EngineKind::rmq: return "rmq";
    case EngineKind::rmq_light: return "rmq-light";
  }
  return "?";
}

std::optional<EngineKind> parse_engine_name(std::string_view name) {
  for (EngineKind e : kAllEngines) {
    if (engine_name(e) == name) return e;
  }
  return std::nullopt;
}

void write_stats(const EngineStats& stats, std::ostream& out) {
  out << "build_time=" << stats.build_seconds << '\n'
      << "compute_time=" << stats.compute_seconds << '\n'
      << "listing_reports=" << stats.listing_reports << '\n'
      << "rank_calls=" << stats.rank_calls << '\n'
      << "select_calls=" << stats.select_calls << '\n';
}

EngineResult engine_sf(const TextCollection& collection,
                       const EngineConfig& cfg) {
  check_config(cfg);
  collection.validate();
  const doc_t d = static_cast<doc_t>(collection.size());
  EngineResult result;
  result.matrix = DistanceMatrix(d, collection.names);

  std::vector<pos_t> doc_len(d + 1, 0);
  for (doc_t i = 1; i <= d; ++i) {
    doc_len[i] = static_cast<pos_t>(collection.docs[i - 1].size() + 1);
  }
  const pos_t bound = max_length(doc_len);
  PairSink sink(result, cfg, doc_len);

  const auto start = Clock::now();
  run_parallel(
      d, cfg.threads, [&] { return SfState{RunHistogram(bound), {}}; },
      [&](SfState& st, doc_t i) {
        for (doc_t j = i + 1; j <= d; ++j) {
          const std::array<std::string_view, 2> pair = {
              collection.docs[i - 1], collection.docs[j - 1]};
          const IntText text = remap(pair);
          const SuffixArray sa = build_suffix_array(text);
          const DocumentArray da = build_document_array(text, sa);
          st.alpha.resize(da.size());
          for (pos_t k = 1; k <= da.size(); ++k) st.alpha[k - 1] = da.da[k] == 2;
          st.hist.clear();
          runs_from_alpha(st.alpha, st.hist);
          sink.emit(i, j, st.hist.entries());
        }
      });
  result.stats.compute_seconds = seconds_since(start);
  return result;
}

EngineResult engine_alg1(const DocumentArray& da, const EngineConfig& cfg,
                         DocIndexFlavor flavor,
                         std::vector<std::string> names) {
  check_config(cfg);
  check_da(da);
  EngineResult result = make_result(da, std::move(names));

  auto start = Clock::now();
  const OccIndex occ = build_occ_index(da);
  const IndexedDocArray idx = build_indexed_doc_array(da, occ, flavor);
  result.stats.build_seconds = seconds_since(start);

  PairSink sink(result, cfg, idx.doc_len);
  const pos_t bound = max_length(idx.doc_len);
  start = Clock::now();
  std::visit(
      [&](const auto& index) {
        alg1_compute(index, occ, cfg, bound, sink, result.stats);
      },
      idx.index);
  result.stats.compute_seconds = seconds_since(start);
  return result;
}

EngineResult engine_alg2(const DocumentArray& da, const EngineConfig& cfg,
                         std::vector<std::string> names) {
  check_config(cfg);
  check_da(da);
  EngineResult result = make_result(da, std::move(names));
  const doc_t d = da.d;

  auto start = Clock::now();
  const OccIndex occ = build_occ_index(da);
  const DocumentLister lister(da, occ);
  const std::vector<pos_t> doc_len = da.counts();
  result.stats.build_seconds = seconds_since(start);

  PairSink sink(result, cfg, doc_len);
  start = Clock::now();
  auto states = run_parallel(
      d, cfg.threads, [&] { return Alg2State(d); },
      [&](Alg2State& st, doc_t i) {
        for_each_interval(occ, i, [&](std::size_t, pos_t q_s, pos_t q_e) {
          if (q_s + 1 > q_e - 1) return;
          lister.list(q_s + 1, q_e - 1, st.ws, st.listed);
          st.stats.listing_reports += st.listed.size();
          for (const ListedDoc& item : st.listed) {
            const doc_t j = item.doc;
            if (j == i) continue;
            const pos_t k = occ.r_arr[item.rightmost] - occ.r_arr[item.leftmost] + 1;
            const std::size_t pair = result.matrix.index(std::min(i, j),
                                                         std::max(i, j));
            st.store[pair].add(k);
          }
        });
      });

  // Serial reduction of the per-worker stores, pair by pair.
  std::vector<RunCount> merged;
  for (doc_t i = 1; i <= d; ++i) {
    for (doc_t j = i + 1; j <= d; ++j) {
      const std::size_t pair = result.matrix.index(i, j);
      SparseCounts counts;
      for (const auto& st : states) {
        auto it = st.store.find(pair);
        if (it == st.store.end()) continue;
        for (const auto& rc : it->second.items) counts.add(rc.length, rc.count);
      }
      std::sort(counts.items.begin(), counts.items.end(),
                [](const RunCount& a, const RunCount& b) {
                  return a.length < b.length;
                });
      sink.emit(i, j, std::move(counts.items));
    }
  }
  for (const auto& st : states) result.stats.add_counters(st.stats);
  result.stats.compute_seconds = seconds_since(start);
  return result;
}

EngineResult engine_alg2_light(const DocumentArray& da,
                               const EngineConfig& cfg,
                               std::vector<std::string> names) {
  check_config(cfg);
  check_da(da);
  EngineResult result = make_result(da, std::move(names));
  const doc_t d = da.d;

  auto start = Clock::now();
  const OccIndex occ = build_occ_index(da);
  const DocumentLister lister(da, occ);
  const std::vector<pos_t> doc_len = da.counts();
  const pos_t bound = max_length(doc_len);
  result.stats.build_seconds = seconds_since(start);

  PairSink sink(result, cfg, doc_len);
  start = Clock::now();
  auto states = run_parallel(
      d, cfg.threads, [&] { return Alg2LightState(d, bound); },
      [&](Alg2LightState& st, doc_t i) {
        std::fill(st.last_seen.begin() + i + 1, st.last_seen.end(),
                  Alg2LightState::kUnseen);
        // Interval p lies between occurrences p and p + 1 of i, so the
        // occurrences of i between two intervals holding j form a 0-run of
        // length equal to the difference of their ordinals.
        for_each_interval(occ, i, [&](std::size_t p, pos_t q_s, pos_t q_e) {
          if (q_s + 1 > q_e - 1) return;
          lister.list(q_s + 1, q_e - 1, st.ws, st.listed);
          st.stats.listing_reports += st.listed.size();
          for (const ListedDoc& item : st.listed) {
            const doc_t j = item.doc;
            if (j <= i) continue;
            const pos_t k = occ.r_arr[item.rightmost] - occ.r_arr[item.leftmost] + 1;
            RunHistogram& h = st.hist[j];
            const pos_t last = st.last_seen[j];
            const pos_t zero_run = static_cast<pos_t>(
                last == Alg2LightState::kUnseen ? p : p - last);
            if (zero_run > 0) h.add_run(zero_run);
            h.add_run(k);
            st.last_seen[j] = static_cast<pos_t>(p);
          }
        });
        const pos_t ni = doc_len[i];
        for (doc_t j = i + 1; j <= d; ++j) {
          assert(st.last_seen[j] != Alg2LightState::kUnseen);
          RunHistogram& h = st.hist[j];
          if (ni > st.last_seen[j]) h.add_run(ni - st.last_seen[j]);
          sink.emit(i, j, h.entries());
          h.clear();
        }
      });
  for (const auto& st : states) result.stats.add_counters(st.stats);
  result.stats.compute_seconds = seconds_since(start);
  return result;
}

EngineResult run_engine(const DocumentArray& da, const EngineConfig& cfg,
                        std::vector<std::string> names) {
  switch (cfg.engine) {
    case EngineKind::sf:
      throw std::invalid_argument("sf needs the text collection");
    case EngineKind::bit:
      return engine_alg1(da, cfg, DocIndexFlavor::plain, std::move(names));
    case EngineKind::bit_sd:
      return engine_alg1(da, cfg, DocIndexFlavor::sparse, std::move(names));
    case EngineKind::wt:
      return engine_alg1(da, cfg, DocIndexFlavor::wavelet, std::move(names));
    case EngineKind::rmq:
      return engine_alg2(da, cfg, std::move(names));
    case EngineKind::rmq_light:
      return engine_alg2_light(da, cfg, std::move(names));
  }
  throw std::invalid_argument("unknown engine");
}

EngineResult run_engine(const TextCollection& collection,
                        const EngineConfig& cfg) {
  if (cfg.engine == EngineKind::sf) return engine_sf(collection, cfg);
  check_config(cfg);
  collection.validate();
  const auto start = Clock::now();
  const IntText text = remap(collection);
  const SuffixArray sa = build_suffix_array(text);
  const DocumentArray da = build_document_array(text, sa);
  const double global_build = seconds_since(start);
  EngineResult result = run_engine(da, cfg, collection.names);
  result.stats.build_seconds += global_build;
  return result;
}

}  // namespace bwsd
