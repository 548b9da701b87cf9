#include "bwsd/document_listing.hpp"

#include <cassert>

namespace bwsd {

void document_listing(const DocumentArray& da, const OccIndex& occ,
                      const RangeExtremumIndex& min_prev,
                      const RangeExtremumIndex& max_next, pos_t l, pos_t r,
                      ListingWorkspace& ws, std::vector<ListedDoc>& out) {
  assert(l >= 1 && l <= r && r <= da.size());
  out.clear();

  ws.stack.clear();
  ws.stack.emplace_back(l, r);
  while (!ws.stack.empty()) {
    auto [lo, hi] = ws.stack.back();
    ws.stack.pop_back();
    pos_t p = min_prev.query(lo, hi);
    if (occ.prev[p] >= l) continue;
    doc_t c = da.da[p];
    ws.slot[c] = static_cast<pos_t>(out.size());
    out.push_back({c, p, 0});
    if (p < hi) ws.stack.emplace_back(p + 1, hi);
    if (p > lo) ws.stack.emplace_back(lo, p - 1);
  }

  ws.stack.emplace_back(l, r);
  while (!ws.stack.empty()) {
    auto [lo, hi] = ws.stack.back();
    ws.stack.pop_back();
    pos_t p = max_next.query(lo, hi);
    if (occ.next[p] <= r) continue;
    doc_t c = da.da[p];
    assert(ws.slot[c] != ListingWorkspace::kNone);
    out[ws.slot[c]].rightmost = p;
    if (p < hi) ws.stack.emplace_back(p + 1, hi);
    if (p > lo) ws.stack.emplace_back(lo, p - 1);
  }

  for (const auto& item : out) ws.slot[item.doc] = ListingWorkspace::kNone;
}

std::vector<ListedDoc> document_listing(const DocumentArray& da,
                                        const OccIndex& occ,
                                        const RangeExtremumIndex& min_prev,
                                        const RangeExtremumIndex& max_next,
                                        pos_t l, pos_t r) {
  ListingWorkspace ws(da.d);
  std::vector<ListedDoc> out;
  document_listing(da, occ, min_prev, max_next, l, r, ws, out);
  return out;
}

}  // namespace bwsd
