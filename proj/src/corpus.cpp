#include "bwsd/corpus.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

namespace bwsd {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open input file: " + path.string());
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("error while reading input file: " + path.string());
  }
  return content;
}

// Calls fn(line, line_number) for every '\n'-separated line. A final line
// without a newline is still reported; the empty tail after a final newline
// is not.
template <class Fn>
void for_each_line(std::string_view content, Fn&& fn) {
  std::size_t line_no = 1;
  std::size_t begin = 0;
  while (begin < content.size()) {
    std::size_t end = content.find('\n', begin);
    if (end == std::string_view::npos) end = content.size();
    fn(content.substr(begin, end - begin), line_no);
    begin = end + 1;
    ++line_no;
  }
}

void reject_nul(std::string_view line, std::size_t line_no) {
  if (line.find('\0') != std::string_view::npos) {
    throw FormatError("line " + std::to_string(line_no) +
                      " contains the reserved byte 0");
  }
}

}  // namespace

void TextCollection::validate() const {
  if (docs.empty()) throw FormatError("no documents");
  if (docs.size() != names.size()) {
    throw FormatError("document and name counts differ");
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].find('\0') != std::string::npos) {
      throw FormatError("document " + std::to_string(i + 1) +
                        " contains the reserved byte 0");
    }
  }
}

TextCollection TextCollection::prefix(std::size_t count) const {
  if (count > docs.size()) {
    throw std::out_of_range("prefix longer than collection");
  }
  TextCollection out;
  out.docs.assign(docs.begin(), docs.begin() + count);
  out.names.assign(names.begin(), names.begin() + count);
  return out;
}

TextCollection parse_lines(std::string_view content) {
  TextCollection out;
  for_each_line(content, [&](std::string_view line, std::size_t line_no) {
    if (line.empty()) return;
    reject_nul(line, line_no);
    out.docs.emplace_back(line);
    out.names.push_back(std::to_string(out.docs.size()));
  });
  if (out.docs.empty()) throw FormatError("no documents");
  return out;
}

TextCollection parse_fasta(std::string_view content) {
  TextCollection out;
  for_each_line(content, [&](std::string_view line, std::size_t line_no) {
    reject_nul(line, line_no);
    if (!line.empty() && line.front() == '>') {
      std::string_view header = line.substr(1);
      std::size_t ws = header.find_first_of(" \t\r\v\f");
      std::string name(header.substr(0, ws));
      if (name.empty()) name = std::to_string(out.docs.size() + 1);
      out.names.push_back(std::move(name));
      out.docs.emplace_back();
      return;
    }
    if (out.docs.empty()) {
      if (line.empty()) return;
      throw FormatError("line " + std::to_string(line_no) +
                        ": sequence data before the first '>' header");
    }
    out.docs.back().append(line);
  });
  if (out.docs.empty()) throw FormatError("no documents");
  return out;
}

TextCollection load_lines(const std::filesystem::path& path) {
  return parse_lines(read_file(path));
}

TextCollection load_fasta(const std::filesystem::path& path) {
  return parse_fasta(read_file(path));
}

TextCollection load_collection(const std::filesystem::path& path,
                               InputFormat format) {
  std::string content = read_file(path);
  if (format == InputFormat::automatic) {
    format = (!content.empty() && content.front() == '>') ? InputFormat::fasta
                                                          : InputFormat::lines;
  }
  return format == InputFormat::fasta ? parse_fasta(content)
                                      : parse_lines(content);
}

IntText remap(std::span<const std::string_view> docs) {
  if (docs.empty()) throw FormatError("no documents");
  std::size_t total = 0;
  for (auto doc : docs) total += doc.size() + 1;
  // Engines append a sentinel and use N + 1 as a position sentinel.
  if (total + 2 > std::numeric_limits<pos_t>::max()) {
    throw std::length_error("collection too large for 32-bit positions");
  }

  IntText text;
  text.d = static_cast<doc_t>(docs.size());
  text.symbols.reserve(total + 1);
  text.symbols.push_back(0);
  text.doc_len.assign(text.d + 1, 0);
  text.doc_start.assign(text.d + 1, 0);
  for (doc_t i = 1; i <= text.d; ++i) {
    std::string_view doc = docs[i - 1];
    text.doc_start[i] = static_cast<pos_t>(text.symbols.size());
    text.doc_len[i] = static_cast<pos_t>(doc.size() + 1);
    for (unsigned char c : doc) {
      if (c == 0) {
        throw FormatError("document " + std::to_string(i) +
                          " contains the reserved byte 0");
      }
      text.symbols.push_back(static_cast<symbol_t>(c) + text.d);
    }
    text.symbols.push_back(i);
  }
  return text;
}

IntText remap(const TextCollection& collection) {
  collection.validate();
  std::vector<std::string_view> views(collection.docs.begin(),
                                      collection.docs.end());
  return remap(views);
}

}  // namespace bwsd
