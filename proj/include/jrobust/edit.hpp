#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jrobust/source_text.hpp"

namespace jrobust {

// Replace `target` (a span of the original text) with `replacement`. An empty
// target is an insertion before target.start_byte.
struct Edit {
  Span target;
  std::string replacement;

  static Edit replace(const SourceText& text, std::size_t begin,
                      std::size_t end, std::string replacement);
  static Edit insert(const SourceText& text, std::size_t at,
                     std::string replacement);

  friend bool operator==(const Edit&, const Edit&) = default;
};

// True if applying `edit` changes the content of `line` in `text`. A
// whole-line insertion at the start of a line (replacement ending in '\n')
// leaves that line intact.
[[nodiscard]] bool edit_touches_line(const SourceText& text, const Edit& edit,
                                     int line);

// One contiguous group of original lines and where it ended up.
struct LineMapEntry {
  int orig_first = 1;
  int orig_last = 1;
  int new_first = 1;  // meaningless when deleted
  int new_last = 1;
  bool edited = false;
  bool deleted = false;

  friend bool operator==(const LineMapEntry&, const LineMapEntry&) = default;
};

// Total map from original 1-based lines to output lines. Untouched lines
// map to exactly one line; runs of edited lines map to a line range or are
// deleted.
class LineMap {
 public:
  LineMap() = default;
  explicit LineMap(std::vector<LineMapEntry> entries);
  static LineMap identity(int line_count);

  [[nodiscard]] const std::vector<LineMapEntry>& entries() const {
    return entries_;
  }
  [[nodiscard]] int original_line_count() const;

  // Output line range for `line`; nullopt if the line was deleted.
  [[nodiscard]] std::optional<std::pair<int, int>> map(int line) const;
  [[nodiscard]] bool touched(int line) const;
  [[nodiscard]] bool is_identity() const;

 private:
  [[nodiscard]] const LineMapEntry& entry_for(int line) const;
  std::vector<LineMapEntry> entries_;
};

struct EditOutcome {
  SourceText text;
  LineMap line_map;
};

// Applies a non-overlapping edit script in position order. Insertions at the
// same offset keep their relative order in `edits`. Throws ContractViolation
// for overlapping or out-of-range edits.
[[nodiscard]] EditOutcome apply_edits(const SourceText& text,
                                      std::span<const Edit> edits);

}  // namespace jrobust
