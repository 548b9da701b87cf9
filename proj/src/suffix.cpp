#include "bwsd/suffix.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace bwsd {

namespace {

using sidx = std::int64_t;
constexpr sidx kEmpty = -1;

void bucket_bounds(std::span<const symbol_t> s, std::vector<sidx>& bkt,
                   bool end) {
  std::fill(bkt.begin(), bkt.end(), 0);
  for (symbol_t c : s) ++bkt[c];
  sidx sum = 0;
  for (auto& b : bkt) {
    sum += b;
    b = end ? sum : sum - b;
  }
}

void induce(std::span<const symbol_t> s, const std::vector<bool>& stype,
            std::vector<sidx>& sa, std::vector<sidx>& bkt) {
  const sidx n = static_cast<sidx>(s.size());
  bucket_bounds(s, bkt, false);
  for (sidx i = 0; i < n; ++i) {
    sidx j = sa[i] - 1;
    if (sa[i] > 0 && !stype[j]) sa[bkt[s[j]]++] = j;
  }
  bucket_bounds(s, bkt, true);
  for (sidx i = n - 1; i >= 0; --i) {
    sidx j = sa[i] - 1;
    if (sa[i] > 0 && stype[j]) sa[--bkt[s[j]]] = j;
  }
}

void sais(std::span<const symbol_t> s, std::vector<sidx>& sa,
          symbol_t alphabet) {
  const sidx n = static_cast<sidx>(s.size());
  sa.assign(n, kEmpty);
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<bool> stype(n);
  stype[n - 1] = true;
  for (sidx i = n - 2; i >= 0; --i) {
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  }
  auto is_lms = [&](sidx i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<sidx> bkt(alphabet);
  bucket_bounds(s, bkt, true);
  for (sidx i = 1; i < n; ++i) {
    if (is_lms(i)) sa[--bkt[s[i]]] = i;
  }
  induce(s, stype, sa, bkt);

  // Sorted LMS positions to the front.
  sidx n1 = 0;
  for (sidx i = 0; i < n; ++i) {
    if (is_lms(sa[i])) sa[n1++] = sa[i];
  }

  // Name LMS substrings; equal substrings share a name.
  std::fill(sa.begin() + n1, sa.end(), kEmpty);
  sidx name = 0;
  sidx prev = kEmpty;
  for (sidx i = 0; i < n1; ++i) {
    sidx pos = sa[i];
    bool diff = false;
    for (sidx k = 0; k < n; ++k) {
      if (prev == kEmpty || s[pos + k] != s[prev + k] ||
          stype[pos + k] != stype[prev + k]) {
        diff = true;
        break;
      }
      if (k > 0 && (is_lms(pos + k) || is_lms(prev + k))) break;
    }
    if (diff) {
      ++name;
      prev = pos;
    }
    sa[n1 + pos / 2] = name - 1;
  }
  std::vector<symbol_t> reduced;
  reduced.reserve(n1);
  for (sidx i = n1; i < n; ++i) {
    if (sa[i] != kEmpty) reduced.push_back(static_cast<symbol_t>(sa[i]));
  }

  std::vector<sidx> reduced_sa;
  if (name < n1) {
    sais(reduced, reduced_sa, static_cast<symbol_t>(name));
  } else {
    reduced_sa.resize(n1);
    for (sidx i = 0; i < n1; ++i) reduced_sa[reduced[i]] = i;
  }

  std::vector<sidx> lms;
  lms.reserve(n1);
  for (sidx i = 1; i < n; ++i) {
    if (is_lms(i)) lms.push_back(i);
  }
  std::fill(sa.begin(), sa.end(), kEmpty);
  bucket_bounds(s, bkt, true);
  for (sidx i = n1 - 1; i >= 0; --i) {
    sidx j = lms[reduced_sa[i]];
    sa[--bkt[s[j]]] = j;
  }
  induce(s, stype, sa, bkt);
}

}  // namespace

std::vector<pos_t> induced_sort(std::span<const symbol_t> text,
                                symbol_t alphabet) {
  assert(!text.empty());
  std::vector<sidx> sa;
  sais(text, sa, alphabet);
  return std::vector<pos_t>(sa.begin(), sa.end());
}

SuffixArray build_suffix_array(const IntText& text) {
  const pos_t n = text.size();
  // Shift by one and append 0 as the unique smallest sentinel. Distinct
  // terminators decide every comparison before the sentinel is reached.
  std::vector<symbol_t> shifted(text.symbols.begin() + 1, text.symbols.end());
  shifted.push_back(0);
  std::vector<pos_t> sa0 = induced_sort(shifted, text.alphabet_size());
  SuffixArray out;
  out.sa.resize(n + 1);
  out.sa[0] = 0;
  for (pos_t i = 1; i <= n; ++i) out.sa[i] = sa0[i] + 1;
  return out;
}

SuffixArray naive_suffix_array(const IntText& text) {
  const pos_t n = text.size();
  SuffixArray out;
  out.sa.resize(n + 1);
  for (pos_t i = 0; i <= n; ++i) out.sa[i] = i;
  const auto& sym = text.symbols;
  std::sort(out.sa.begin() + 1, out.sa.end(), [&](pos_t a, pos_t b) {
    return std::lexicographical_compare(sym.begin() + a, sym.end(),
                                        sym.begin() + b, sym.end());
  });
  return out;
}

BwtString build_bwt(const IntText& text, const SuffixArray& sa) {
  const pos_t n = text.size();
  BwtString out;
  out.bwt.resize(n + 1);
  out.bwt[0] = 0;
  for (pos_t i = 1; i <= n; ++i) {
    out.bwt[i] = sa.sa[i] != 1 ? text.symbols[sa.sa[i] - 1] : text.symbols[n];
  }
  return out;
}

std::vector<pos_t> DocumentArray::counts() const {
  std::vector<pos_t> out(d + 1, 0);
  for (pos_t i = 1; i < da.size(); ++i) ++out[da[i]];
  return out;
}

DocumentArray build_document_array(const IntText& text,
                                   const SuffixArray& sa) {
  const pos_t n = text.size();
  std::vector<doc_t> owner(n + 1, 0);
  for (doc_t c = 1; c <= text.d; ++c) {
    std::fill_n(owner.begin() + text.doc_start[c], text.doc_len[c], c);
  }
  DocumentArray out;
  out.d = text.d;
  out.da.resize(n + 1);
  out.da[0] = 0;
  for (pos_t i = 1; i <= n; ++i) out.da[i] = owner[sa.sa[i]];
  return out;
}

DocumentArray block_document_array(std::span<const pos_t> lengths) {
  DocumentArray out;
  out.d = static_cast<doc_t>(lengths.size());
  out.da.push_back(0);
  for (doc_t c = 1; c <= out.d; ++c) {
    if (lengths[c - 1] == 0) {
      throw std::invalid_argument("every document occurs at least once");
    }
    out.da.insert(out.da.end(), lengths[c - 1], c);
  }
  return out;
}

OccIndex build_occ_index(const DocumentArray& da) {
  const pos_t n = da.size();
  const doc_t d = da.d;
  OccIndex occ;
  occ.r_arr.assign(n + 1, 0);
  occ.prev.assign(n + 1, 0);
  occ.next.assign(n + 1, 0);

  std::vector<pos_t> counts = da.counts();
  occ.occ_offsets.assign(d + 2, 0);
  for (doc_t c = 1; c <= d; ++c) {
    occ.occ_offsets[c + 1] = occ.occ_offsets[c] + counts[c];
  }
  occ.occ_positions.resize(n);

  std::vector<pos_t> seen(d + 1, 0);
  std::vector<pos_t> last(d + 1, 0);
  for (pos_t i = 1; i <= n; ++i) {
    doc_t c = da.da[i];
    occ.r_arr[i] = ++seen[c];
    occ.prev[i] = last[c];
    last[c] = i;
    occ.occ_positions[occ.occ_offsets[c] + seen[c] - 1] = i;
  }
  std::fill(last.begin(), last.end(), n + 1);
  for (pos_t i = n; i >= 1; --i) {
    doc_t c = da.da[i];
    occ.next[i] = last[c];
    last[c] = i;
  }
  return occ;
}

void dump_rows(std::ostream& out, const IntText& text, const DocumentArray& da,
               const BwtString& bwt) {
  for (pos_t i = 1; i <= da.size(); ++i) {
    out << i << '\t' << da.da[i] << '\t';
    symbol_t s = bwt.bwt[i];
    if (text.is_terminator(s)) {
      out << '$' << s;
    } else {
      out << static_cast<char>(s - text.d);
    }
    out << '\n';
  }
}

}  // namespace bwsd
