#include "jrobust/source_text.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "jrobust/error.hpp"

namespace jrobust {

SourceText::SourceText() : line_index_{0} {}

SourceText::SourceText(std::string content) : content_(std::move(content)) {
  line_index_.push_back(0);
  for (std::size_t i = 0; i < content_.size(); ++i) {
    if (content_[i] == '\n' && i + 1 < content_.size()) {
      line_index_.push_back(i + 1);
    }
  }
}

int SourceText::line_of(std::size_t offset) const {
  auto it = std::upper_bound(line_index_.begin(), line_index_.end(), offset);
  return static_cast<int>(it - line_index_.begin());
}

std::size_t SourceText::line_start(int line) const {
  if (line < 1 || line > line_count()) {
    throw ContractViolation("line " + std::to_string(line) + " out of range");
  }
  return line_index_[static_cast<std::size_t>(line - 1)];
}

std::size_t SourceText::line_end(int line) const {
  if (line < 1 || line > line_count()) {
    throw ContractViolation("line " + std::to_string(line) + " out of range");
  }
  return line == line_count() ? content_.size()
                              : line_index_[static_cast<std::size_t>(line)];
}

std::string_view SourceText::line_text(int line) const {
  std::string_view text = slice(line_start(line), line_end(line));
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  return text;
}

std::string_view SourceText::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > content_.size()) {
    throw ContractViolation("byte range [" + std::to_string(begin) + ", " +
                            std::to_string(end) + ") outside text of size " +
                            std::to_string(content_.size()));
  }
  return std::string_view(content_).substr(begin, end - begin);
}

Span SourceText::span(std::size_t begin, std::size_t end) const {
  if (begin > end || end > content_.size()) {
    throw ContractViolation("byte range [" + std::to_string(begin) + ", " +
                            std::to_string(end) + ") outside text of size " +
                            std::to_string(content_.size()));
  }
  Span s{begin, end, line_of(begin), line_of(begin)};
  if (end > begin) s.end_line = line_of(end - 1);
  return s;
}

Span SourceText::line_span(int first, int last) const {
  if (first > last) throw ContractViolation("inverted line range");
  return span(line_start(first), line_end(last));
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t j = 1; j < len; ++j) {
      const auto cc = static_cast<unsigned char>(bytes[i + j]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates, and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jrobust
