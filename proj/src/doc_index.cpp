#include "bwsd/doc_index.hpp"

#include <stdexcept>
#include <string>

namespace bwsd {

WaveletDocIndex::WaveletDocIndex(const DocumentArray& da)
    : tree_(std::span<const doc_t>(da.da).subspan(1), da.d),
      counts_(da.counts()) {}

IndexedDocArray build_indexed_doc_array(const DocumentArray& da,
                                        const OccIndex& occ,
                                        DocIndexFlavor flavor) {
  IndexedDocArray out;
  out.doc_len = da.counts();
  switch (flavor) {
    case DocIndexFlavor::plain:
      out.index.emplace<PlainDocIndex>(da, occ);
      break;
    case DocIndexFlavor::sparse:
      out.index.emplace<SparseDocIndex>(da, occ);
      break;
    case DocIndexFlavor::wavelet:
      out.index.emplace<WaveletDocIndex>(da);
      break;
  }
  return out;
}

std::size_t rank_doc(const IndexedDocArray& idx, doc_t c, std::size_t i) {
  assert(c >= 1 && c <= idx.documents());
  assert(i <= idx.size());
  return std::visit([&](const auto& x) { return x.rank(c, i); }, idx.index);
}

std::size_t select_doc(const IndexedDocArray& idx, doc_t c, std::size_t k) {
  assert(c >= 1 && c <= idx.documents());
  if (k == 0 || k > idx.doc_len[c]) {
    throw std::out_of_range("document " + std::to_string(c) + " has only " +
                            std::to_string(idx.doc_len[c]) + " occurrences");
  }
  return std::visit([&](const auto& x) { return x.select(c, k); }, idx.index);
}

}  // namespace bwsd
