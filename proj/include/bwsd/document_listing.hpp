#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "bwsd/range_extremum.hpp"
#include "bwsd/suffix.hpp"

namespace bwsd {

/// A distinct document of a DA interval with its leftmost and rightmost
/// position inside that interval.
struct ListedDoc {
  doc_t doc;
  pos_t leftmost;
  pos_t rightmost;

  friend bool operator==(const ListedDoc&, const ListedDoc&) = default;
};

/// Reusable per-thread scratch for document_listing. Holds one slot per
/// document, all reset to kNone between calls.
struct ListingWorkspace {
  static constexpr pos_t kNone = std::numeric_limits<pos_t>::max();

  explicit ListingWorkspace(doc_t d = 0) : slot(d + 1, kNone) {}

  std::vector<pos_t> slot;
  std::vector<std::pair<pos_t, pos_t>> stack;
};

/// Distinct documents in DA[l..r] (1 <= l <= r <= N), in output-sensitive
/// time. Leftmost occurrences are the positions p with prev[p] < l, found
/// by recursing on range-min over prev; rightmost occurrences are the
/// positions with next[p] > r, found by range-max over next.
/// `out` is cleared first.
void document_listing(const DocumentArray& da, const OccIndex& occ,
                      const RangeExtremumIndex& min_prev,
                      const RangeExtremumIndex& max_next, pos_t l, pos_t r,
                      ListingWorkspace& ws, std::vector<ListedDoc>& out);

std::vector<ListedDoc> document_listing(const DocumentArray& da,
                                        const OccIndex& occ,
                                        const RangeExtremumIndex& min_prev,
                                        const RangeExtremumIndex& max_next,
                                        pos_t l, pos_t r);

/// Owns the range-extremum indexes over prev/next of an OccIndex.
class DocumentLister {
 public:
  DocumentLister(const DocumentArray& da, const OccIndex& occ)
      : da_(&da),
        occ_(&occ),
        min_prev_(occ.prev, Extremum::min),
        max_next_(occ.next, Extremum::max) {}

  void list(pos_t l, pos_t r, ListingWorkspace& ws,
            std::vector<ListedDoc>& out) const {
    document_listing(*da_, *occ_, min_prev_, max_next_, l, r, ws, out);
  }

  const RangeExtremumIndex& min_prev() const { return min_prev_; }
  const RangeExtremumIndex& max_next() const { return max_next_; }

 private:
  const DocumentArray* da_;
  const OccIndex* occ_;
  RangeExtremumIndex min_prev_;
  RangeExtremumIndex max_next_;
};

}  // namespace bwsd
