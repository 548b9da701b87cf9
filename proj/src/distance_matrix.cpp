#include "bwsd/distance_matrix.hpp"

#include <stdexcept>

namespace bwsd {

DistanceMatrix::DistanceMatrix(doc_t d, std::vector<std::string> names)
    : d_(d), values_(pair_count(d), 0.0), names_(std::move(names)) {
  if (names_.empty()) {
    for (doc_t i = 1; i <= d; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != d) {
    throw std::invalid_argument("one name per document required");
  }
}

}  // namespace bwsd
