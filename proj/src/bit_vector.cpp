#include "bwsd/bit_vector.hpp"

#include <cassert>
#include <stdexcept>

namespace bwsd {

namespace {

constexpr std::size_t kWordsPerSuper = 8;
constexpr std::size_t kSuperBits = 64 * kWordsPerSuper;
constexpr std::size_t kSelectSample = 256;

// Position (0-based) of the k-th set bit of w, k >= 1.
unsigned select_in_word(std::uint64_t w, std::size_t k) {
  for (std::size_t i = 1; i < k; ++i) w &= w - 1;
  return static_cast<unsigned>(__builtin_ctzll(w));
}

}  // namespace

RsBitvector::RsBitvector(std::span<const std::uint32_t> ones,
                         std::size_t size)
    : size_(size) {
  words_.assign(size / 64 + 1, 0);
  for (std::uint32_t p : ones) {
    assert(p >= 1 && p <= size);
    std::size_t b = p - 1;
    words_[b >> 6] |= std::uint64_t{1} << (b & 63);
  }
  build_directory();
}

RsBitvector::RsBitvector(std::vector<std::uint64_t> words, std::size_t size)
    : words_(std::move(words)), size_(size) {
  words_.resize(size / 64 + 1, 0);
  if (size % 64 != 0) {
    words_[size / 64] &= (std::uint64_t{1} << (size % 64)) - 1;
  } else {
    words_[size / 64] = 0;
  }
  build_directory();
}

void RsBitvector::build_directory() {
  const std::size_t n_words = words_.size();
  super_.assign(n_words / kWordsPerSuper + 2, 0);
  block_.assign(n_words, 0);
  std::size_t total = 0;
  for (std::size_t w = 0; w < n_words; ++w) {
    if (w % kWordsPerSuper == 0) super_[w / kWordsPerSuper] = total;
    block_[w] = static_cast<std::uint16_t>(total - super_[w / kWordsPerSuper]);
    total += static_cast<std::size_t>(__builtin_popcountll(words_[w]));
  }
  for (std::size_t s = (n_words + kWordsPerSuper - 1) / kWordsPerSuper;
       s < super_.size(); ++s) {
    super_[s] = total;
  }
  ones_ = total;

  sample1_.clear();
  sample0_.clear();
  const std::size_t n_super = (n_words + kWordsPerSuper - 1) / kWordsPerSuper;
  std::size_t next1 = 1, next0 = 1;
  for (std::size_t s = 0; s < n_super; ++s) {
    std::size_t ones_end = super_[s + 1];
    std::size_t zeros_end = (s + 1) * kSuperBits - ones_end;
    while (next1 <= ones_end && next1 <= ones_) {
      sample1_.push_back(static_cast<std::uint32_t>(s));
      next1 += kSelectSample;
    }
    while (next0 <= zeros_end && next0 <= size_ - ones_) {
      sample0_.push_back(static_cast<std::uint32_t>(s));
      next0 += kSelectSample;
    }
  }
}

template <bool Bit>
std::size_t RsBitvector::select_impl(std::size_t k) const {
  const std::size_t n_super =
      (words_.size() + kWordsPerSuper - 1) / kWordsPerSuper;
  auto before = [&](std::size_t s) -> std::size_t {
    return Bit ? super_[s] : s * kSuperBits - super_[s];
  };
  const auto& samples = Bit ? sample1_ : sample0_;
  std::size_t idx = (k - 1) / kSelectSample;
  std::size_t lo = samples[idx];
  std::size_t hi = idx + 1 < samples.size() ? samples[idx + 1] : n_super - 1;
  // Last superblock s in [lo, hi] with before(s) < k.
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (before(mid) < k) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::size_t remaining = k - before(lo);
  std::size_t w = lo * kWordsPerSuper;
  for (;; ++w) {
    std::uint64_t word = Bit ? words_[w] : ~words_[w];
    std::size_t c = static_cast<std::size_t>(__builtin_popcountll(word));
    if (c >= remaining) {
      return w * 64 + select_in_word(word, remaining) + 1;
    }
    remaining -= c;
  }
}

std::size_t RsBitvector::select1(std::size_t k) const {
  if (k == 0 || k > ones_) throw std::out_of_range("select1 past last one");
  return select_impl<true>(k);
}

std::size_t RsBitvector::select0(std::size_t k) const {
  if (k == 0 || k > size_ - ones_) {
    throw std::out_of_range("select0 past last zero");
  }
  return select_impl<false>(k);
}

std::size_t RsBitvector::bytes() const {
  return words_.size() * 8 + super_.size() * 8 + block_.size() * 2 +
         (sample1_.size() + sample0_.size()) * 4;
}

}  // namespace bwsd
