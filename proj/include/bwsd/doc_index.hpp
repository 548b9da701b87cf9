#pragma once

#include <cassert>
#include <cstddef>
#include <variant>
#include <vector>

#include "bwsd/bit_vector.hpp"
#include "bwsd/sparse_bit_vector.hpp"
#include "bwsd/suffix.hpp"
#include "bwsd/wavelet_tree.hpp"

namespace bwsd {

enum class DocIndexFlavor { plain, sparse, wavelet };

/// One bitvector B_c per document, B_c[p] = 1 iff DA[p] = c.
template <class Bitvector>
class BitvectorDocIndex {
 public:
  BitvectorDocIndex() = default;
  BitvectorDocIndex(const DocumentArray& da, const OccIndex& occ)
      : size_(da.size()) {
    bits_.reserve(da.d + 1);
    bits_.emplace_back();
    for (doc_t c = 1; c <= da.d; ++c) {
      bits_.emplace_back(occ.occurrences(c), size_);
    }
  }

  std::size_t size() const { return size_; }
  doc_t documents() const { return static_cast<doc_t>(bits_.size() - 1); }
  std::size_t rank(doc_t c, std::size_t i) const { return bits_[c].rank1(i); }
  std::size_t select(doc_t c, std::size_t k) const {
    return bits_[c].select1(k);
  }
  std::size_t count(doc_t c) const { return bits_[c].count_ones(); }
  std::size_t bytes() const {
    std::size_t total = 0;
    for (const auto& b : bits_) total += b.bytes();
    return total;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Bitvector> bits_;
};

using PlainDocIndex = BitvectorDocIndex<RsBitvector>;
using SparseDocIndex = BitvectorDocIndex<SparseBitvector>;

class WaveletDocIndex {
 public:
  WaveletDocIndex() = default;
  explicit WaveletDocIndex(const DocumentArray& da);

  std::size_t size() const { return tree_.size(); }
  doc_t documents() const { return tree_.sigma(); }
  std::size_t rank(doc_t c, std::size_t i) const { return tree_.rank(c, i); }
  std::size_t select(doc_t c, std::size_t k) const {
    return tree_.select(c, k);
  }
  std::size_t count(doc_t c) const { return counts_[c]; }
  std::size_t bytes() const { return tree_.bytes(); }

 private:
  WaveletTree tree_;
  std::vector<pos_t> counts_;
};

/// Rank/select view of a document array in one of three representations.
struct IndexedDocArray {
  std::variant<PlainDocIndex, SparseDocIndex, WaveletDocIndex> index;
  std::vector<pos_t> doc_len;  // doc_len[1..d]

  doc_t documents() const { return static_cast<doc_t>(doc_len.size() - 1); }
  pos_t size() const {
    return static_cast<pos_t>(
        std::visit([](const auto& x) { return x.size(); }, index));
  }
};

IndexedDocArray build_indexed_doc_array(const DocumentArray& da,
                                        const OccIndex& occ,
                                        DocIndexFlavor flavor);

/// Occurrences of document c in DA[1..i]; rank_doc(idx, c, 0) == 0.
std::size_t rank_doc(const IndexedDocArray& idx, doc_t c, std::size_t i);

/// Position of the k-th occurrence of c. Throws std::out_of_range when c
/// has fewer than k occurrences.
std::size_t select_doc(const IndexedDocArray& idx, doc_t c, std::size_t k);

}  // namespace bwsd
