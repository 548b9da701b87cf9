#include <doctest.h>

#include <random>
#include <sstream>

#include "bwsd/suffix.hpp"
#include "support/oracles.hpp"

using namespace bwsd;

namespace {

IntText text_of(std::vector<std::string> docs) {
  TextCollection c;
  c.docs = std::move(docs);
  for (std::size_t i = 0; i < c.docs.size(); ++i) {
    c.names.push_back(std::to_string(i + 1));
  }
  return remap(c);
}

std::vector<pos_t> tail(const std::vector<pos_t>& v) {
  return {v.begin() + 1, v.end()};
}

// Printable BWT: terminators as '$', others as their byte.
std::string bwt_string(const IntText& t, const BwtString& b) {
  std::string out;
  for (pos_t i = 1; i < b.bwt.size(); ++i) {
    out.push_back(t.is_terminator(b.bwt[i]) ? '$'
                                            : static_cast<char>(b.bwt[i] - t.d));
  }
  return out;
}

}  // namespace

TEST_CASE("suffix array of banana$") {
  IntText t = text_of({"banana"});
  CHECK(tail(build_suffix_array(t).sa) ==
        std::vector<pos_t>{7, 6, 4, 2, 1, 5, 3});
  CHECK(tail(build_suffix_array(text_of({"a"})).sa) ==
        std::vector<pos_t>{2, 1});
}

TEST_CASE("suffix array of banana$1 anaba$2 matches a brute-force sort") {
  IntText t = text_of({"banana", "anaba"});
  const std::vector<pos_t> expected = {7, 13, 6, 12, 10, 4, 8, 2, 11, 1, 5, 9, 3};
  CHECK(tail(naive_suffix_array(t).sa) == expected);
  CHECK(tail(build_suffix_array(t).sa) == expected);
}

TEST_CASE("BWT") {
  IntText single = text_of({"banana"});
  CHECK(bwt_string(single, build_bwt(single, build_suffix_array(single))) ==
        "annb$aa");

  IntText pair = text_of({"banana", "anaba"});
  BwtString b = build_bwt(pair, build_suffix_array(pair));
  CHECK(bwt_string(pair, b) == "aanbnn$ba$aaa");
  CHECK(b.bwt[7] == 1);
  CHECK(b.bwt[10] == 2);

  IntText tiny = text_of({"a"});
  BwtString bt = build_bwt(tiny, build_suffix_array(tiny));
  CHECK(bt.bwt[1] == static_cast<symbol_t>('a') + 1);
  CHECK(bt.bwt[2] == 1);
}

TEST_CASE("document array") {
  IntText pair = text_of({"banana", "anaba"});
  DocumentArray da = build_document_array(pair, build_suffix_array(pair));
  CHECK(std::vector<doc_t>(da.da.begin() + 1, da.da.end()) ==
        std::vector<doc_t>{1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 1, 2, 1});
  CHECK(da.counts() == std::vector<pos_t>{0, 7, 6});

  IntText single = text_of({"mississippi"});
  DocumentArray one = build_document_array(single, build_suffix_array(single));
  for (pos_t i = 1; i <= one.size(); ++i) CHECK(one.da[i] == 1);

  IntText same = text_of({"a", "a"});
  DocumentArray two = build_document_array(same, build_suffix_array(same));
  CHECK(std::vector<doc_t>(two.da.begin() + 1, two.da.end()) ==
        testing::brute_force_da({"a", "a"}));
  CHECK(std::vector<doc_t>(two.da.begin() + 1, two.da.end()) ==
        std::vector<doc_t>{1, 2, 1, 2});
}

TEST_CASE("occurrence index on the two-document example") {
  IntText pair = text_of({"banana", "anaba"});
  OccIndex occ = build_occ_index(build_document_array(pair, build_suffix_array(pair)));
  CHECK(tail(occ.r_arr) ==
        std::vector<pos_t>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7});
  CHECK(tail(occ.prev) ==
        std::vector<pos_t>{0, 0, 1, 2, 4, 3, 5, 6, 7, 8, 10, 9, 11});
  CHECK(tail(occ.next) ==
        std::vector<pos_t>{3, 4, 6, 5, 7, 8, 9, 10, 12, 11, 13, 14, 14});
  auto first = occ.occurrences(1);
  CHECK(std::vector<pos_t>(first.begin(), first.end()) ==
        std::vector<pos_t>{1, 3, 6, 8, 10, 11, 13});
  CHECK(occ.occurrences(2).size() == 6);

  DocumentArray lone;
  lone.d = 1;
  lone.da = {0, 1};
  OccIndex o = build_occ_index(lone);
  CHECK(tail(o.r_arr) == std::vector<pos_t>{1});
  CHECK(tail(o.prev) == std::vector<pos_t>{0});
  CHECK(tail(o.next) == std::vector<pos_t>{2});
}

TEST_CASE("induced sorting agrees with comparison sort on random texts") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const int d = 1 + static_cast<int>(rng() % 6);
    const int sigma = 1 + static_cast<int>(rng() % 4);
    auto c = testing::random_collection(rng, d, 40, sigma);
    IntText t = remap(c);
    SuffixArray fast = build_suffix_array(t);
    CHECK(fast.sa == naive_suffix_array(t).sa);
    DocumentArray da = build_document_array(t, fast);
    CHECK(std::vector<doc_t>(da.da.begin() + 1, da.da.end()) ==
          testing::brute_force_da(c.docs));
  }
  // Long periodic text exercises deep recursion.
  IntText periodic = text_of({std::string(3000, 'a'),
                              std::string(1000, 'a') + std::string(1000, 'b')});
  CHECK(build_suffix_array(periodic).sa == naive_suffix_array(periodic).sa);
}

TEST_CASE("global DA restricted to a pair equals the pair's own DA") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const int d = 2 + static_cast<int>(rng() % 5);
    auto c = testing::random_collection(rng, d, 12, 1 + static_cast<int>(rng() % 3));
    IntText t = remap(c);
    DocumentArray da = build_document_array(t, build_suffix_array(t));
    for (int x = 1; x <= d; ++x) {
      for (int y = x + 1; y <= d; ++y) {
        std::vector<doc_t> restricted;
        for (pos_t i = 1; i <= da.size(); ++i) {
          if (da.da[i] == static_cast<doc_t>(x)) restricted.push_back(1);
          if (da.da[i] == static_cast<doc_t>(y)) restricted.push_back(2);
        }
        CHECK(restricted == testing::brute_force_da({c.docs[x - 1], c.docs[y - 1]}));
      }
    }
  }
}

TEST_CASE("inverting the BWT of one document recovers it") {
  for (std::string doc : {"banana", "mississippi", "a", "", "abracadabra"}) {
    IntText t = text_of({doc});
    SuffixArray sa = build_suffix_array(t);
    BwtString b = build_bwt(t, sa);
    const pos_t n = t.size();
    // LF mapping: row of the suffix starting one position earlier.
    std::vector<pos_t> count(t.alphabet_size() + 1, 0);
    for (pos_t i = 1; i <= n; ++i) ++count[b.bwt[i] + 1];
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    std::vector<pos_t> lf(n + 1);
    std::vector<pos_t> seen(t.alphabet_size(), 0);
    for (pos_t i = 1; i <= n; ++i) {
      lf[i] = count[b.bwt[i]] + ++seen[b.bwt[i]];
    }
    // Row 1 is the suffix "$"; walk backwards from it.
    std::string out;
    pos_t row = 1;
    for (pos_t step = 1; step < n; ++step) {
      out.push_back(static_cast<char>(b.bwt[row] - t.d));
      row = lf[row];
    }
    std::reverse(out.begin(), out.end());
    CHECK(out == doc);
  }
}

TEST_CASE("prev/next are mutually inverse") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    auto c = testing::random_collection(rng, 1 + static_cast<int>(rng() % 8), 20, 3);
    IntText t = remap(c);
    DocumentArray da = build_document_array(t, build_suffix_array(t));
    OccIndex occ = build_occ_index(da);
    const pos_t n = da.size();
    for (pos_t i = 1; i <= n; ++i) {
      if (occ.prev[i] != 0) CHECK(occ.next[occ.prev[i]] == i);
      if (occ.next[i] != n + 1) CHECK(occ.prev[occ.next[i]] == i);
    }
    for (doc_t c2 = 1; c2 <= da.d; ++c2) {
      auto list = occ.occurrences(c2);
      CHECK(list.size() == t.doc_len[c2]);
      for (std::size_t k = 0; k < list.size(); ++k) {
        CHECK(occ.r_arr[list[k]] == k + 1);
      }
    }
  }
}

TEST_CASE("block document array and row dump") {
  const std::vector<pos_t> lens = {2, 1, 3};
  DocumentArray da = block_document_array(lens);
  CHECK(da.da == std::vector<doc_t>{0, 1, 1, 2, 3, 3, 3});
  CHECK_THROWS(block_document_array(std::vector<pos_t>{1, 0}));

  IntText t = text_of({"ab"});
  SuffixArray sa = build_suffix_array(t);
  std::ostringstream out;
  dump_rows(out, t, build_document_array(t, sa), build_bwt(t, sa));
  CHECK(out.str() == "1\t1\tb\n2\t1\t$1\n3\t1\ta\n");
}
