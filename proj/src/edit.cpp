#include "jrobust/edit.hpp"

#include <algorithm>
#include <numeric>

#include "jrobust/error.hpp"

namespace jrobust {
namespace {

bool whole_line_insertion(const SourceText& text, const Edit& e) {
  if (!e.target.empty() || e.replacement.empty() ||
      e.replacement.back() != '\n') {
    return false;
  }
  const std::size_t at = e.target.start_byte;
  if (at == text.size()) return true;
  return text.line_start(text.line_of(at)) == at;
}

// Edits sorted by start offset; stable so that same-offset insertions keep
// their order and precede a replacement starting at that offset.
std::vector<std::size_t> sorted_order(std::span<const Edit> edits) {
  std::vector<std::size_t> order(edits.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Edit& ea = edits[a];
    const Edit& eb = edits[b];
    if (ea.target.start_byte != eb.target.start_byte) {
      return ea.target.start_byte < eb.target.start_byte;
    }
    return ea.target.empty() && !eb.target.empty();
  });
  return order;
}

}  // namespace

Edit Edit::replace(const SourceText& text, std::size_t begin, std::size_t end,
                   std::string replacement) {
  return Edit{text.span(begin, end), std::move(replacement)};
}

Edit Edit::insert(const SourceText& text, std::size_t at,
                  std::string replacement) {
  return Edit{text.span(at, at), std::move(replacement)};
}

bool edit_touches_line(const SourceText& text, const Edit& edit, int line) {
  const std::size_t ls = text.line_start(line);
  const std::size_t le = text.line_end(line);
  const std::size_t s = edit.target.start_byte;
  const std::size_t e = edit.target.end_byte;
  if (s != e) return s < le && e > ls;
  if (edit.replacement.empty()) return false;
  // Offset `le` belongs to the next line unless this is the last line and it
  // has no trailing newline.
  const bool last_open = line == text.line_count() &&
                         (le == ls || text.content()[le - 1] != '\n');
  const bool inside = (ls <= s && s < le) || (last_open && s == le);
  if (!inside) return false;
  return !(s == ls && whole_line_insertion(text, edit));
}

LineMap::LineMap(std::vector<LineMapEntry> entries)
    : entries_(std::move(entries)) {}

LineMap LineMap::identity(int line_count) {
  return LineMap({LineMapEntry{1, line_count, 1, line_count, false, false}});
}

int LineMap::original_line_count() const {
  return entries_.empty() ? 0 : entries_.back().orig_last;
}

const LineMapEntry& LineMap::entry_for(int line) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), line,
      [](const LineMapEntry& e, int l) { return e.orig_last < l; });
  if (it == entries_.end() || it->orig_first > line) {
    throw ContractViolation("line " + std::to_string(line) +
                            " is not covered by the line map");
  }
  return *it;
}

std::optional<std::pair<int, int>> LineMap::map(int line) const {
  const LineMapEntry& e = entry_for(line);
  if (e.deleted) return std::nullopt;
  if (!e.edited) {
    const int shift = line - e.orig_first;
    return std::pair{e.new_first + shift, e.new_first + shift};
  }
  return std::pair{e.new_first, e.new_last};
}

bool LineMap::touched(int line) const { return entry_for(line).edited; }

bool LineMap::is_identity() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) {
    return !e.edited && e.orig_first == e.new_first && e.orig_last == e.new_last;
  });
}

EditOutcome apply_edits(const SourceText& text, std::span<const Edit> edits) {
  for (const Edit& e : edits) {
    if (e.target.start_byte > e.target.end_byte ||
        e.target.end_byte > text.size()) {
      throw ContractViolation("edit span out of range");
    }
  }
  const std::vector<std::size_t> order = sorted_order(edits);
  std::size_t max_end = 0;
  for (std::size_t idx : order) {
    const Span& cur = edits[idx].target;
    if (cur.start_byte < max_end) throw ContractViolation("overlapping edits");
    max_end = std::max(max_end, cur.end_byte);
  }

  const std::string& in = text.content();
  std::string out;
  out.reserve(in.size());
  std::size_t cursor = 0;
  for (std::size_t idx : order) {
    const Edit& e = edits[idx];
    out.append(in, cursor, e.target.start_byte - cursor);
    out += e.replacement;
    cursor = e.target.end_byte;
  }
  out.append(in, cursor, std::string::npos);
  SourceText result(std::move(out));
  const std::string& res = result.content();

  // Output offset of original offset `p`: shifted by every edit that ends
  // before p and, when `include_at` is set, by whole-line insertions at p.
  auto shifted = [&](std::size_t p, bool include_at) {
    long long delta = 0;
    for (const Edit& e : edits) {
      const std::size_t s = e.target.start_byte;
      const std::size_t en = e.target.end_byte;
      const long long d = static_cast<long long>(e.replacement.size()) -
                          static_cast<long long>(en - s);
      if (en < p || (en == p && s < p)) {
        delta += d;
      } else if (s == p && en == p && include_at &&
                 whole_line_insertion(text, e)) {
        delta += d;
      }
    }
    return static_cast<std::size_t>(static_cast<long long>(p) + delta);
  };

  const int n = text.line_count();
  const auto idx = [](int l) { return static_cast<std::size_t>(l); };
  std::vector<bool> touched(idx(n) + 1, false);
  std::vector<int> run_id(idx(n) + 1, 0);
  for (int l = 1; l <= n; ++l) run_id[idx(l)] = l;

  for (const Edit& e : edits) {
    const int first = std::max(1, e.target.start_line - 1);
    const int last = std::min(n, e.target.end_line + 1);
    for (int l = first; l <= last; ++l) {
      if (edit_touches_line(text, e, l)) touched[idx(l)] = true;
    }
    // A multi-line replacement joins every line it spans into one run.
    if (!e.target.empty()) {
      for (int l = e.target.start_line + 1; l <= e.target.end_line; ++l) {
        run_id[idx(l)] = run_id[idx(e.target.start_line)];
      }
    }
  }
  // A line whose bytes survive but no longer begin an output line (the
  // preceding newline was edited away) is touched and joins that run.
  for (int l = 2; l <= n; ++l) {
    if (touched[idx(l)]) continue;
    const std::size_t ns = shifted(text.line_start(l), true);
    if (ns > 0 && res[ns - 1] != '\n') {
      touched[idx(l)] = true;
      if (touched[idx(l - 1)]) run_id[idx(l)] = run_id[idx(l - 1)];
    }
  }

  std::vector<LineMapEntry> entries;
  int l = 1;
  while (l <= n) {
    if (!touched[idx(l)]) {
      // Maximal run of untouched lines sharing one shift.
      const int new_line = result.line_of(shifted(text.line_start(l), true));
      int last = l;
      while (last + 1 <= n && !touched[idx(last + 1)] &&
             result.line_of(shifted(text.line_start(last + 1), true)) ==
                 new_line + (last + 1 - l)) {
        ++last;
      }
      entries.push_back(
          LineMapEntry{l, last, new_line, new_line + (last - l), false, false});
      l = last + 1;
      continue;
    }
    int last = l;
    while (last + 1 <= n && touched[idx(last + 1)] &&
           run_id[idx(last + 1)] == run_id[idx(l)]) {
      ++last;
    }
    const std::size_t region_start = shifted(text.line_start(l), true);
    const std::size_t region_end = shifted(text.line_end(last), false);
    LineMapEntry entry{l, last, 0, 0, true, false};
    if (region_end <= region_start) {
      entry.deleted = true;
      entry.new_first = entry.new_last = result.line_of(region_start);
    } else {
      entry.new_first = result.line_of(region_start);
      entry.new_last = result.line_of(region_end - 1);
    }
    entries.push_back(entry);
    l = last + 1;
  }
  return EditOutcome{std::move(result), LineMap(std::move(entries))};
}

}  // namespace jrobust
