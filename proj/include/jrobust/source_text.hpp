#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jrobust {

// Byte range [start_byte, end_byte) with the 1-based inclusive line range it
// occupies. For an empty span both lines are the line holding start_byte.
struct Span {
  std::size_t start_byte = 0;
  std::size_t end_byte = 0;
  int start_line = 1;
  int end_line = 1;

  [[nodiscard]] std::size_t size() const { return end_byte - start_byte; }
  [[nodiscard]] bool empty() const { return start_byte == end_byte; }
  [[nodiscard]] bool contains(const Span& other) const {
    return start_byte <= other.start_byte && other.end_byte <= end_byte;
  }
  [[nodiscard]] bool overlaps(const Span& other) const {
    return start_byte < other.end_byte && other.start_byte < end_byte;
  }
  [[nodiscard]] bool covers_line(int line) const {
    return start_line <= line && line <= end_line;
  }

  friend bool operator==(const Span&, const Span&) = default;
};

// Immutable UTF-8 program text with a line-start index.
class SourceText {
 public:
  SourceText();
  explicit SourceText(std::string content);

  [[nodiscard]] const std::string& content() const { return content_; }
  [[nodiscard]] std::string_view view() const { return content_; }
  [[nodiscard]] std::size_t size() const { return content_.size(); }
  [[nodiscard]] std::span<const std::size_t> line_index() const {
    return line_index_;
  }

  // Number of lines. Empty text has one empty line; a trailing newline does
  // not open a new line.
  [[nodiscard]] int line_count() const {
    return static_cast<int>(line_index_.size());
  }

  // 1-based line holding `offset`; offsets at or past the end map to the
  // last line.
  [[nodiscard]] int line_of(std::size_t offset) const;

  [[nodiscard]] std::size_t line_start(int line) const;
  // One past the last byte of `line`, including its newline if present.
  [[nodiscard]] std::size_t line_end(int line) const;
  // Line content without the terminating "\n" (or "\r\n").
  [[nodiscard]] std::string_view line_text(int line) const;

  [[nodiscard]] std::string_view slice(std::size_t begin,
                                       std::size_t end) const;
  [[nodiscard]] std::string_view slice(const Span& span) const {
    return slice(span.start_byte, span.end_byte);
  }

  // Builds a Span with line numbers for [begin, end).
  [[nodiscard]] Span span(std::size_t begin, std::size_t end) const;
  // Span covering whole lines first..last, including the final newline.
  [[nodiscard]] Span line_span(int first, int last) const;

  friend bool operator==(const SourceText& a, const SourceText& b) {
    return a.content_ == b.content_;
  }

 private:
  std::string content_;
  std::vector<std::size_t> line_index_;
};

[[nodiscard]] bool is_valid_utf8(std::string_view bytes);

// Trims ASCII whitespace on both sides.
[[nodiscard]] std::string_view trim(std::string_view s);

// Whole file as bytes. Throws InputError when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace jrobust
