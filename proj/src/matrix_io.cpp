#include "bwsd/matrix_io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace bwsd {

namespace {

void check(const std::ostream& out) {
  if (!out) throw std::runtime_error("failed to write distance matrix");
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  int len = std::snprintf(buf, sizeof buf, "%.6f", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_tsv(const DistanceMatrix& m, std::ostream& out) {
  const doc_t d = m.size();
  for (doc_t i = 0; i < d; ++i) {
    if (i > 0) out << '\t';
    out << m.names()[i];
  }
  out << '\n';
  for (doc_t i = 1; i <= d; ++i) {
    for (doc_t j = 1; j <= d; ++j) {
      if (j > 1) out << '\t';
      out << format_value(m.get(i, j));
    }
    out << '\n';
  }
  check(out);
}

void write_phylip(const DistanceMatrix& m, std::ostream& out) {
  const doc_t d = m.size();
  out << d << '\n';
  for (doc_t i = 1; i <= d; ++i) {
    std::string name = m.names()[i - 1].substr(0, 10);
    name.resize(10, ' ');
    out << name;
    for (doc_t j = 1; j <= d; ++j) {
      if (j > 1) out << ' ';
      out << format_value(m.get(i, j));
    }
    out << '\n';
  }
  check(out);
}

void write_matrix(const DistanceMatrix& m, MatrixFormat format,
                  std::ostream& out) {
  if (format == MatrixFormat::tsv) {
    write_tsv(m, out);
  } else {
    write_phylip(m, out);
  }
}

}  // namespace bwsd
