#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "bwsd/corpus.hpp"
#include "bwsd/types.hpp"

namespace bwsd {

struct SuffixArray {
  std::vector<pos_t> sa;  // sa[1..N], 1-based text positions
  pos_t size() const { return static_cast<pos_t>(sa.size() - 1); }
};

struct BwtString {
  std::vector<symbol_t> bwt;  // bwt[1..N]
};

struct DocumentArray {
  doc_t d = 0;
  std::vector<doc_t> da;  // da[1..N], values in 1..d

  pos_t size() const { return static_cast<pos_t>(da.size() - 1); }
  /// Occurrences of each document, counts[1..d].
  std::vector<pos_t> counts() const;
};

/// Per-position occurrence data derived from a document array.
///
/// prev uses 0 and next uses N + 1 for "no such position".
struct OccIndex {
  std::vector<pos_t> r_arr;  // r_arr[i] = rank of da[i] within da[1..i]
  std::vector<pos_t> prev;
  std::vector<pos_t> next;
  // CSR layout: positions of document c are
  // occ_positions[occ_offsets[c] .. occ_offsets[c + 1]).
  std::vector<pos_t> occ_offsets;
  std::vector<pos_t> occ_positions;

  pos_t size() const { return static_cast<pos_t>(r_arr.size() - 1); }
  doc_t documents() const {
    return static_cast<doc_t>(occ_offsets.size() - 2);
  }
  std::span<const pos_t> occurrences(doc_t c) const {
    return std::span<const pos_t>(occ_positions)
        .subspan(occ_offsets[c], occ_offsets[c + 1] - occ_offsets[c]);
  }
};

/// Suffix array of an integer text over alphabet [0, alphabet) by induced
/// sorting. `text` is 0-based and must end in a unique smallest symbol.
/// Returns 0-based suffix starts.
std::vector<pos_t> induced_sort(std::span<const symbol_t> text,
                                symbol_t alphabet);

SuffixArray build_suffix_array(const IntText& text);

/// Comparison sort of all suffixes. Quadratic worst case; test oracle.
SuffixArray naive_suffix_array(const IntText& text);

BwtString build_bwt(const IntText& text, const SuffixArray& sa);

DocumentArray build_document_array(const IntText& text,
                                   const SuffixArray& sa);

/// DA = 1^{lengths[0]} 2^{lengths[1]} ... : the layout produced by
/// mutually dissimilar documents.
DocumentArray block_document_array(std::span<const pos_t> lengths);

OccIndex build_occ_index(const DocumentArray& da);

/// One line per row: "i TAB DA[i] TAB BWT[i]", terminators shown as $k.
void dump_rows(std::ostream& out, const IntText& text, const DocumentArray& da,
               const BwtString& bwt);

}  // namespace bwsd
