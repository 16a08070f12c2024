#include "jrobust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "jrobust/error.hpp"
#include "jrobust/syntax_tree.hpp"
#include "jrobust/transforms.hpp"

namespace jrobust {

SampleStats SampleStats::from_outcomes(const std::vector<bool>& passed) {
  SampleStats s;
  s.n = static_cast<int>(passed.size());
  for (std::size_t i = 0; i < passed.size(); ++i) {
    if (!passed[i]) continue;
    ++s.c;
    if (s.first_pass == 0) s.first_pass = static_cast<int>(i) + 1;
  }
  return s;
}

namespace {

void check_stats(const SampleStats& s, int k) {
  if (s.n < 0 || s.c < 0 || s.c > s.n) {
    throw ContractViolation("sample stats need 0 <= c <= n");
  }
  if (k < 0 || k > s.n) {
    throw ContractViolation("pass@" + std::to_string(k) + " needs at least " +
                            std::to_string(k) + " samples, bug has " +
                            std::to_string(s.n));
  }
}

}  // namespace

double pass_at_k_any(std::span<const SampleStats> per_bug, int k) {
  if (per_bug.empty()) throw MetricError("pass@k over an empty bug list");
  int fixed = 0;
  for (const SampleStats& s : per_bug) {
    check_stats(s, k);
    if (s.first_pass >= 1 && s.first_pass <= k) ++fixed;
  }
  return 100.0 * fixed / static_cast<double>(per_bug.size());
}

double unbiased_term(int n, int c, int k) {
  check_stats(SampleStats{n, c, 0}, k);
  if (k == 0) return 0.0;
  if (n - c < k) return 1.0;
  // C(n-c, k) / C(n, k) = prod_{i=n-c+1}^{n} (1 - k / i)
  double ratio = 1.0;
  for (int i = n - c + 1; i <= n; ++i) ratio *= 1.0 - static_cast<double>(k) / i;
  return 1.0 - ratio;
}

double pass_at_k_unbiased(std::span<const SampleStats> per_bug, int k) {
  if (per_bug.empty()) throw MetricError("pass@k over an empty bug list");
  double sum = 0.0;
  for (const SampleStats& s : per_bug) sum += unbiased_term(s.n, s.c, k);
  return 100.0 * sum / static_cast<double>(per_bug.size());
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
    r = (r / g) * ((n - k + i) / (i / g));
  }
  return r;
}

Fraction unbiased_term_exact(int n, int c, int k) {
  check_stats(SampleStats{n, c, 0}, k);
  if (n > 60) throw ContractViolation("exact pass@k supports n <= 60");
  const std::uint64_t total = binomial(n, k);
  const std::uint64_t missing = binomial(n - c, k);
  std::uint64_t num = total - missing;
  std::uint64_t den = total;
  const std::uint64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Up:
      return "up";
    case Direction::Down:
      return "down";
    case Direction::None:
      return "none";
  }
  return "none";
}

double round2(double x) {
  // Nudge before rounding so values such as 4.645 stored as 4.6449999... still
  // round half away from zero.
  const double scaled = x * 100.0;
  return std::round(scaled + std::copysign(1e-9, scaled)) / 100.0;
}

Change relative_change(double orig, double trans) {
  if (!std::isfinite(orig) || !std::isfinite(trans) || orig < 0 || trans < 0) {
    throw ContractViolation("relative_change needs finite nonnegative percents");
  }
  Change ch;
  ch.direction = trans > orig ? Direction::Up
                 : trans < orig ? Direction::Down
                                : Direction::None;
  if (orig == 0.0) {
    ch.from_zero = trans > 0.0;
    return ch;
  }
  ch.percent = round2(100.0 * std::fabs(trans - orig) / orig);
  if (ch.percent == 0.0) ch.percent = 0.0;  // drop negative zero
  return ch;
}

std::vector<std::string> code_tokens(const SourceText& text) {
  SyntaxTree tree;
  try {
    tree = parse_source(text);
  } catch (const InputError& e) {
    throw MetricError(std::string("cannot tokenize: ") + e.what());
  }
  std::vector<std::string> out;
  for (NodeId t : tree.tokens()) {
    const Span s = tree.node(t).span;
    if (s.empty()) continue;
    out.emplace_back(text.slice(s));
  }
  return out;
}

namespace {

using Gram = std::vector<std::string>;

std::map<Gram, int> ngram_counts(const std::vector<std::string>& toks, int n) {
  std::map<Gram, int> counts;
  if (static_cast<int>(toks.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    ++counts[Gram(toks.begin() + i, toks.begin() + i + n)];
  }
  return counts;
}

double gram_weight(const Gram& g, bool keyword_weighted) {
  if (!keyword_weighted || g.size() != 1) return 1.0;
  return is_java_keyword(g.front()) ? kKeywordWeight : 1.0;
}

}  // namespace

double bleu4(const std::vector<std::string>& reference,
             const std::vector<std::string>& hypothesis, bool keyword_weighted) {
  if (hypothesis.empty() || reference.empty()) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto ref = ngram_counts(reference, n);
    const auto hyp = ngram_counts(hypothesis, n);
    double matched = 0.0;
    double total = 0.0;
    for (const auto& [g, count] : hyp) {
      const double w = gram_weight(g, keyword_weighted);
      total += w * count;
      if (auto it = ref.find(g); it != ref.end()) {
        matched += w * std::min(count, it->second);
      }
    }
    const double p = matched > 0.0 ? matched / total : 1.0 / (total + 1.0);
    log_sum += 0.25 * std::log(p);
  }
  const double c = static_cast<double>(hypothesis.size());
  const double r = static_cast<double>(reference.size());
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return std::clamp(bp * std::exp(log_sum), 0.0, 1.0);
}

namespace {

// Canonical signatures of every named subtree of height <= kMaxSubtreeHeight.
std::map<std::string, int> subtree_signatures(const SourceText& text) {
  SyntaxTree tree;
  try {
    tree = parse_source(text);
  } catch (const InputError& e) {
    throw MetricError(std::string("cannot parse: ") + e.what());
  }
  const std::size_t n = tree.size();
  std::vector<int> height(n, 0);
  std::vector<std::string> sig(n);
  std::map<std::string, int> out;
  // Pre-order storage: children always follow their parent.
  for (std::size_t idx = n; idx-- > 0;) {
    const SyntaxNode& node = tree.node(static_cast<NodeId>(idx));
    if (!node.named || node.is_extra) continue;
    std::vector<NodeId> kids;
    for (NodeId c : node.children) {
      if (tree.node(c).named && !tree.node(c).is_extra) kids.push_back(c);
    }
    if (kids.empty()) {
      height[idx] = 1;
      sig[idx] = "(" + node.kind + " " + std::string(text.slice(node.span)) + ")";
    } else {
      int h = 0;
      std::string s = "(" + node.kind;
      for (NodeId c : kids) {
        h = std::max(h, height[c]);
        s += " ";
        s += height[c] <= kMaxSubtreeHeight ? sig[c] : std::string("...");
      }
      height[idx] = h + 1;
      s += ")";
      if (height[idx] <= kMaxSubtreeHeight) sig[idx] = std::move(s);
    }
    if (height[idx] <= kMaxSubtreeHeight) ++out[sig[idx]];
  }
  return out;
}

}  // namespace

double subtree_match(const SourceText& reference, const SourceText& hypothesis) {
  const auto ref = subtree_signatures(reference);
  const auto hyp = subtree_signatures(hypothesis);
  long total = 0;
  long matched = 0;
  for (const auto& [s, count] : ref) {
    total += count;
    if (auto it = hyp.find(s); it != hyp.end()) matched += std::min(count, it->second);
  }
  if (total == 0) return hyp.empty() ? 1.0 : 0.0;
  return static_cast<double>(matched) / static_cast<double>(total);
}

CodeBleuScore codebleu_subset(const SourceText& reference,
                              const SourceText& hypothesis,
                              const CodeBleuWeights& weights) {
  const double sum = weights.ngram + weights.weighted + weights.ast;
  if (weights.ngram < 0 || weights.weighted < 0 || weights.ast < 0 ||
      std::fabs(sum - 1.0) > 1e-9) {
    throw ContractViolation("CodeBLEU weights must be nonnegative and sum to 1");
  }
  const auto ref = code_tokens(reference);
  const auto hyp = code_tokens(hypothesis);
  CodeBleuScore s;
  if (ref == hyp && subtree_signatures(reference) == subtree_signatures(hypothesis)) {
    s.ngram = s.weighted = s.ast = s.total = 1.0;
    return s;
  }
  s.ngram = bleu4(ref, hyp, false);
  s.weighted = bleu4(ref, hyp, true);
  s.ast = hypothesis.size() == 0 ? 0.0 : subtree_match(reference, hypothesis);
  s.total = std::clamp(
      weights.ngram * s.ngram + weights.weighted * s.weighted + weights.ast * s.ast,
      0.0, 1.0);
  return s;
}

}  // namespace jrobust
