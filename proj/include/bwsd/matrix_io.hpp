#pragma once

#include <iosfwd>
#include <string>

#include "bwsd/distance_matrix.hpp"

namespace bwsd {

enum class MatrixFormat { tsv, phylip };

/// Header row of names, then d rows of d tab-separated values ("%.6f").
void write_tsv(const DistanceMatrix& m, std::ostream& out);

/// Square PHYLIP: the dimension on the first line, then per document its
/// name padded or truncated to 10 characters followed by d values.
void write_phylip(const DistanceMatrix& m, std::ostream& out);

void write_matrix(const DistanceMatrix& m, MatrixFormat format,
                  std::ostream& out);

std::string format_value(double v);

}  // namespace bwsd
