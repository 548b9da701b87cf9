#pragma once

#include <cstdint>

namespace bwsd {

// Positions, document indices and symbols are 1-based throughout. Arrays
// indexed by position or document reserve slot 0 so that `a[i]` is the
// value at position i; slot 0 holds 0 unless documented otherwise.
using pos_t = std::uint32_t;
using doc_t = std::uint32_t;
using symbol_t = std::uint32_t;

}  // namespace bwsd
