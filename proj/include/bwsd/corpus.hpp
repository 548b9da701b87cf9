#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwsd/types.hpp"

namespace bwsd {

/// Input file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input was read but does not follow the expected layout.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ordered collection of byte strings. Terminators are not stored.
struct TextCollection {
  std::vector<std::string> docs;
  std::vector<std::string> names;

  std::size_t size() const { return docs.size(); }

  /// Throws FormatError when the collection is empty, names and docs
  /// disagree in length, or a document contains the reserved byte 0.
  void validate() const;

  /// The first `count` documents (count must not exceed size()).
  TextCollection prefix(std::size_t count) const;
};

enum class InputFormat { automatic, fasta, lines };

// Parsers operate on the raw file contents; loaders add file I/O.
TextCollection parse_lines(std::string_view content);
TextCollection parse_fasta(std::string_view content);

TextCollection load_lines(const std::filesystem::path& path);
TextCollection load_fasta(const std::filesystem::path& path);

/// Dispatches on `format`; `automatic` picks FASTA when the file starts
/// with '>' and line-delimited text otherwise.
TextCollection load_collection(const std::filesystem::path& path,
                               InputFormat format = InputFormat::automatic);

/// Integer-remapped concatenation S_1 $_1 S_2 $_2 ... S_d $_d.
///
/// Terminator of document i has value i. A raw byte b becomes b + d, so
/// every terminator sorts before every ordinary symbol and terminators sort
/// among themselves by document index.
struct IntText {
  std::vector<symbol_t> symbols;  // symbols[1..N]
  doc_t d = 0;
  std::vector<pos_t> doc_len;    // doc_len[1..d], counts the terminator
  std::vector<pos_t> doc_start;  // doc_start[1..d], 1-based offsets

  pos_t size() const { return static_cast<pos_t>(symbols.size() - 1); }
  /// Largest symbol value plus one.
  symbol_t alphabet_size() const { return d + 256; }
  bool is_terminator(symbol_t s) const { return s >= 1 && s <= d; }
};

IntText remap(const TextCollection& collection);
IntText remap(std::span<const std::string_view> docs);

}  // namespace bwsd
