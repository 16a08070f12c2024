#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jrobust/source_text.hpp"

namespace jrobust {

// Per-bug sampling outcome. first_pass is the 1-based ordinal of the first
// passing sample, 0 when none passed.
struct SampleStats {
  int n = 0;
  int c = 0;
  int first_pass = 0;

  static SampleStats from_outcomes(const std::vector<bool>& passed);
};

// 100 * fraction of bugs with a passing sample among their first k.
// Throws MetricError on an empty list, ContractViolation when some n < k.
double pass_at_k_any(std::span<const SampleStats> per_bug, int k);

// Mean of 1 - C(n-c, k) / C(n, k), times 100, in overflow-safe product form.
double pass_at_k_unbiased(std::span<const SampleStats> per_bug, int k);
double unbiased_term(int n, int c, int k);

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};
// Same term as an exact fraction (n up to 60).
Fraction unbiased_term_exact(int n, int c, int k);
std::uint64_t binomial(int n, int k);

enum class Direction { Up, Down, None };
std::string_view to_string(Direction d);

struct Change {
  double percent = 0.0;  // rounded to 2 decimals, nonnegative
  Direction direction = Direction::None;
  bool from_zero = false;  // orig == 0 < trans: percentage undefined
};

// 100 * |trans - orig| / orig, rounded half away from zero to 2 decimals.
Change relative_change(double orig, double trans);
double round2(double x);

struct CodeBleuWeights {
  double ngram = 1.0 / 3;
  double weighted = 1.0 / 3;
  double ast = 1.0 / 3;
};

struct CodeBleuScore {
  double ngram = 0.0;
  double weighted = 0.0;
  double ast = 0.0;
  double total = 0.0;
};

inline constexpr double kKeywordWeight = 5.0;
inline constexpr int kMaxSubtreeHeight = 3;

// Token stream used by the n-gram components: the syntax tree's leaves.
// Throws MetricError when the text is not valid UTF-8.
std::vector<std::string> code_tokens(const SourceText& text);

// Sentence BLEU-4 with add-one smoothing of zero-match orders and the usual
// brevity penalty. The weighted variant counts Java keyword unigrams 5x.
double bleu4(const std::vector<std::string>& reference,
             const std::vector<std::string>& hypothesis, bool keyword_weighted);

// Fraction of the reference's height <= 3 subtrees (multiset) present in the
// hypothesis. Signatures include the text of named leaves.
double subtree_match(const SourceText& reference, const SourceText& hypothesis);

CodeBleuScore codebleu_subset(const SourceText& reference,
                              const SourceText& hypothesis,
                              const CodeBleuWeights& weights = {});

}  // namespace jrobust
