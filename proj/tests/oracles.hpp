#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jrobust/edit.hpp"
#include "jrobust/source_text.hpp"

// Independent reference implementations shared by the unit and acceptance
// tests.
namespace jrobust::testdata {

// Counts k-subsets of n samples (c of them passing) that contain a pass.
inline std::pair<std::uint64_t, std::uint64_t> enumerate_subsets(int n, int c, int k) {
  std::uint64_t hits = 0, total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    ++total;
    // Samples 0..c-1 pass.
    if ((mask & ((1u << c) - 1)) != 0) ++hits;
  }
  return {hits, total};
}

// Independent n-gram precision: linear scans over token windows.
inline double brute_precision(const std::vector<std::string>& ref,
                       const std::vector<std::string>& hyp, int n) {
  if (hyp.size() < static_cast<std::size_t>(n)) return -1;
  std::vector<std::vector<std::string>> rgrams, hgrams;
  for (std::size_t i = 0; i + n <= ref.size(); ++i) {
    rgrams.emplace_back(ref.begin() + i, ref.begin() + i + n);
  }
  for (std::size_t i = 0; i + n <= hyp.size(); ++i) {
    hgrams.emplace_back(hyp.begin() + i, hyp.begin() + i + n);
  }
  std::vector<bool> used(rgrams.size(), false);
  int matched = 0;
  for (const auto& g : hgrams) {
    for (std::size_t j = 0; j < rgrams.size(); ++j) {
      if (!used[j] && rgrams[j] == g) {
        used[j] = true;
        ++matched;
        break;
      }
    }
  }
  return matched == 0 ? 1.0 / (hgrams.size() + 1.0)
                      : static_cast<double>(matched) / hgrams.size();
}

inline double brute_bleu(const std::vector<std::string>& ref,
                  const std::vector<std::string>& hyp) {
  if (hyp.empty() || ref.empty()) return 0.0;
  double log_sum = 0;
  for (int n = 1; n <= 4; ++n) {
    double p = brute_precision(ref, hyp, n);
    if (p < 0) p = 1.0;  // no hypothesis n-grams: smoothed 1/(0+1)
    log_sum += std::log(p) / 4;
  }
  const double c = hyp.size(), r = ref.size();
  const double bp = c > r ? 1.0 : std::exp(1 - r / c);
  return bp * std::exp(log_sum);
}

// Strict notion of an unedited line: no replaced byte on it, no
// insertion strictly inside it, its own start not joined to the previous
// line, and an insertion at its start only when that insertion is whole lines.
inline bool line_unedited(const SourceText& t, const std::vector<Edit>& edits, int line) {
  const std::size_t ls = t.line_start(line);
  const std::size_t le = t.line_end(line);
  const bool last_open = line == t.line_count() && (le == ls || t.content()[le - 1] != '\n');
  for (const Edit& e : edits) {
    const std::size_t s = e.target.start_byte, end = e.target.end_byte;
    if (s != end) {
      if (s < le && end > ls) return false;
      // The previous newline was replaced; the line survives only if the
      // replacement still ends a line.
      if (s < ls && end == ls && (e.replacement.empty() || e.replacement.back() != '\n')) {
        return false;
      }
      continue;
    }
    if (e.replacement.empty()) continue;
    if (s > ls && s < le) return false;
    if (s == le && last_open) return false;
    if (s == ls && e.replacement.back() != '\n') return false;
  }
  return true;
}

inline std::vector<Edit> random_script(const SourceText& t, std::mt19937_64& rng) {
  static const std::vector<std::string> kPieces = {"", "x", "\n", "foo\nbar", "\n\n", "  y;\n",
                                                   "/* c */"};
  std::uniform_int_distribution<std::size_t> pos(0, t.size());
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_int_distribution<int> len(0, 30);
  std::uniform_int_distribution<std::size_t> piece(0, kPieces.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::size_t s = pos(rng);
    std::size_t e = std::min(t.size(), s + (rng() % 3 == 0 ? 0 : len(rng)));
    // Snap some edits to line starts to exercise whole-line insertions.
    if (rng() % 4 == 0) {
      s = t.line_start(t.line_of(s));
      e = s;
    }
    bool clash = false;
    for (auto [a, b] : ranges) {
      if ((s < b && a < e) || (s == e && a < s && s < b) || (a == b && s < a && a < e)) {
        clash = true;
      }
    }
    if (!clash) ranges.emplace_back(s, e);
  }
  std::ranges::sort(ranges);
  std::vector<Edit> edits;
  for (auto [s, e] : ranges) {
    std::string rep = kPieces[piece(rng)];
    if (s == e && rep.empty()) rep = "z";
    edits.push_back(s == e ? Edit::insert(t, s, rep) : Edit::replace(t, s, e, rep));
  }
  return edits;
}

}  // namespace jrobust::testdata
