#include <doctest.h>

#include <random>
#include <sstream>

#include "bwsd/distance_matrix.hpp"
#include "bwsd/matrix_io.hpp"
#include "support/oracles.hpp"

using namespace bwsd;

TEST_CASE("packed triangle indexing") {
  DistanceMatrix m(4, {});
  std::size_t expected = 0;
  for (doc_t i = 1; i <= 4; ++i) {
    CHECK(m.row(i).size() == 4 - i);
    for (doc_t j = i + 1; j <= 4; ++j) CHECK(m.index(i, j) == expected++);
  }
  CHECK(expected == DistanceMatrix::pair_count(4));
  m.set(2, 4, 0.5);
  CHECK(m.get(2, 4) == 0.5);
  CHECK(m.get(4, 2) == 0.5);
  CHECK(m.get(3, 3) == 0.0);
  CHECK(m.names() == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(DistanceMatrix::pair_count(1) == 0);
}

TEST_CASE("TSV output") {
  DistanceMatrix m(2, {"1", "2"});
  m.set(1, 2, 2.0 / 11.0);
  std::ostringstream out;
  write_tsv(m, out);
  CHECK(out.str() == "1\t2\n0.000000\t0.181818\n0.181818\t0.000000\n");

  DistanceMatrix single(1, {"only"});
  std::ostringstream one;
  write_tsv(single, one);
  CHECK(one.str() == "only\n0.000000\n");
}

TEST_CASE("PHYLIP output") {
  DistanceMatrix m(2, {"S1", "a_very_long_name"});
  m.set(1, 2, 2.0 / 11.0);
  std::ostringstream out;
  write_phylip(m, out);
  CHECK(out.str() ==
        "2\nS1        0.000000 0.181818\na_very_lon0.181818 0.000000\n");
}

TEST_CASE("write/parse round trip") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 20; ++round) {
    const doc_t d = 1 + static_cast<doc_t>(rng() % 12);
    std::vector<std::string> names;
    for (doc_t i = 1; i <= d; ++i) names.push_back("doc" + std::to_string(i));
    DistanceMatrix m(d, names);
    for (doc_t i = 1; i <= d; ++i) {
      for (doc_t j = i + 1; j <= d; ++j) {
        m.set(i, j, std::uniform_real_distribution<double>(0, 50)(rng));
      }
    }
    for (auto format : {MatrixFormat::tsv, MatrixFormat::phylip}) {
      std::ostringstream out;
      write_matrix(m, format, out);
      std::vector<std::string> parsed_names;
      auto rows = format == MatrixFormat::tsv
                      ? testing::parse_tsv(out.str(), &parsed_names)
                      : testing::parse_phylip(out.str(), &parsed_names);
      REQUIRE(rows.size() == d);
      for (doc_t i = 1; i <= d; ++i) {
        std::string expected_name = names[i - 1];
        if (format == MatrixFormat::phylip) expected_name.resize(10, ' ');
        CHECK(parsed_names[i - 1] == expected_name);
        for (doc_t j = 1; j <= d; ++j) {
          CHECK(std::abs(rows[i - 1][j - 1] - m.get(i, j)) <= 1e-6);
        }
      }
    }
  }
}
