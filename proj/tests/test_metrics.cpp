#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "jrobust/error.hpp"
#include "jrobust/metrics.hpp"
#include "oracles.hpp"
#include "published.hpp"

using namespace jrobust;
using namespace jrobust::testdata;

TEST_SUITE("metrics") {

TEST_CASE("pass@k any reading") {
  std::vector<SampleStats> none(10, SampleStats{10, 0, 0});
  CHECK(pass_at_k_any(none, 10) == 0.0);

  std::vector<SampleStats> all(10, SampleStats{10, 3, 2});
  CHECK(pass_at_k_any(all, 10) == 100.0);

  std::vector<SampleStats> bugs(100, SampleStats{10, 0, 0});
  for (int i = 0; i < 14; ++i) bugs[i] = SampleStats{10, 1, 5};
  CHECK(pass_at_k_any(bugs, 10) == doctest::Approx(14.0));
  // First pass at ordinal 5 is outside the first 3 samples.
  CHECK(pass_at_k_any(bugs, 3) == 0.0);

  CHECK_THROWS_AS(pass_at_k_any(std::vector<SampleStats>{}, 1), MetricError);
  CHECK_THROWS_AS(pass_at_k_any(std::vector<SampleStats>{{3, 1, 1}}, 4),
                  ContractViolation);
}

TEST_CASE("from_outcomes records the first pass") {
  const auto s = SampleStats::from_outcomes({false, false, true, false, true});
  CHECK(s.n == 5);
  CHECK(s.c == 2);
  CHECK(s.first_pass == 3);
}

TEST_CASE("unbiased estimator examples") {
  CHECK(unbiased_term(10, 0, 5) == 0.0);
  CHECK(unbiased_term(6, 1, 6) == 1.0);
  CHECK(unbiased_term(6, 0, 6) == 0.0);
  CHECK(unbiased_term(4, 2, 2) == doctest::Approx(5.0 / 6.0));
  const Fraction f = unbiased_term_exact(4, 2, 2);
  CHECK(f.num == 5);
  CHECK(f.den == 6);
  CHECK_THROWS_AS(unbiased_term(3, 1, 4), ContractViolation);
}

TEST_CASE("unbiased estimator matches subset enumeration") {
  int cases = 0;
  for (int n = 0; n <= 12; ++n) {
    for (int c = 0; c <= n; ++c) {
      for (int k = 0; k <= n; ++k) {
        const auto [hits, total] = enumerate_subsets(n, c, k);
        const Fraction f = unbiased_term_exact(n, c, k);
        CHECK(f.num * total == hits * f.den);
        CHECK(unbiased_term(n, c, k) ==
              doctest::Approx(static_cast<double>(hits) / total).epsilon(1e-12));
        ++cases;
      }
    }
  }
  CHECK(cases == 819);
}

TEST_CASE("unbiased estimator is the expectation of any-of-k over orderings") {
  for (int n = 1; n <= 6; ++n) {
    for (int c = 0; c <= n; ++c) {
      std::vector<bool> outcomes(n, false);
      std::fill(outcomes.end() - c, outcomes.end(), true);
      for (int k = 1; k <= n; ++k) {
        double sum = 0;
        int perms = 0;
        std::vector<bool> v = outcomes;
        do {
          const SampleStats s = SampleStats::from_outcomes(v);
          sum += pass_at_k_any(std::vector<SampleStats>{s}, k);
          ++perms;
        } while (std::next_permutation(v.begin(), v.end()));
        // next_permutation visits distinct arrangements, which are equally
        // likely under a uniform random ordering.
        CHECK(sum / perms == doctest::Approx(100.0 * unbiased_term(n, c, k)));
      }
    }
  }
}

TEST_CASE("unbiased estimator is monotone in k") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SampleStats> bugs;
    for (int b = 0; b < 5; ++b) {
      const int n = 10;
      bugs.push_back({n, static_cast<int>(rng() % (n + 1)), 0});
    }
    double prev = -1;
    for (int k = 1; k <= 10; ++k) {
      const double v = pass_at_k_unbiased(bugs, k);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("relative change examples") {
  auto a = relative_change(14.53, 6.54);
  CHECK(a.percent == doctest::Approx(54.99));
  CHECK(a.direction == Direction::Down);
  auto b = relative_change(17.86, 18.69);
  CHECK(b.percent == doctest::Approx(4.65));
  CHECK(b.direction == Direction::Up);
  auto c = relative_change(22.22, 22.22);
  CHECK(c.percent == 0.0);
  CHECK(c.direction == Direction::None);
  auto z = relative_change(0.0, 5.0);
  CHECK(z.from_zero);
  CHECK(z.direction == Direction::Up);
  auto zz = relative_change(0.0, 0.0);
  CHECK_FALSE(zz.from_zero);
  CHECK(zz.direction == Direction::None);
  for (double x : {0.01, 1.0, 33.3, 99.99}) {
    auto s = relative_change(x, x);
    CHECK(s.percent == 0.0);
    CHECK(s.direction == Direction::None);
  }
}

TEST_CASE("relative change reproduces the published change column") {
  for (const auto& row : testdata::kPublishedPass10) {
    CAPTURE(row.kind);
    CAPTURE(row.model);
    const Change ch = relative_change(row.orig, row.trans);
    CHECK(std::fabs(ch.percent - row.change) <= 0.02);
    const Direction want = row.arrow == 'u'   ? Direction::Up
                           : row.arrow == 'd' ? Direction::Down
                                              : Direction::None;
    CHECK(ch.direction == want);
  }
}

TEST_CASE("codebleu identity and empty hypothesis") {
  const SourceText prog(
      "class A {\n  int f(int x) {\n    if (x == 0) return 1;\n    return x * f(x - 1);\n  }\n}\n");
  const CodeBleuScore same = codebleu_subset(prog, prog);
  CHECK(same.total == 1.0);
  const CodeBleuScore empty = codebleu_subset(prog, SourceText(""));
  CHECK(empty.ngram == 0.0);
  CHECK(empty.weighted == 0.0);
  CHECK(empty.ast == 0.0);
  CHECK(empty.total == 0.0);
}

TEST_CASE("codebleu of token-disjoint programs is small") {
  const SourceText a("class A { int f(int x) { return x + 1; } }");
  const SourceText b("enum Q { P, R; }");
  const CodeBleuScore s = codebleu_subset(a, b);
  CHECK(s.total < 0.1);
  CHECK(s.total >= 0.0);
}

TEST_CASE("codebleu stays in range and rejects bad weights") {
  const SourceText a("class A { void f() { int i = 0; i++; } }");
  const SourceText b("class A { void f() { int j = 0; j++; } }");
  const CodeBleuScore s = codebleu_subset(a, b);
  CHECK(s.total > 0.0);
  CHECK(s.total < 1.0);
  CHECK_THROWS_AS(codebleu_subset(a, b, {0.5, 0.5, 0.5}), ContractViolation);
  CHECK_THROWS_AS(codebleu_subset(a, b, {-0.5, 0.5, 1.0}), ContractViolation);
}

TEST_CASE("bleu agrees with a brute-force n-gram counter") {
  std::mt19937 rng(11);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "(", ")", "int",
                                          "return", ";", "x", "y", "=="};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> ref, hyp;
    const int rn = 1 + rng() % 30, hn = 1 + rng() % 30;
    for (int i = 0; i < rn; ++i) ref.push_back(vocab[rng() % vocab.size()]);
    for (int i = 0; i < hn; ++i) hyp.push_back(vocab[rng() % vocab.size()]);
    CHECK(bleu4(ref, hyp, false) == doctest::Approx(brute_bleu(ref, hyp)).epsilon(1e-12));
  }
}

TEST_CASE("keyword weighting raises the weight of keyword matches") {
  const std::vector<std::string> ref = {"return", "x", ";"};
  const std::vector<std::string> hyp_kw = {"return", "y", "z"};
  const std::vector<std::string> hyp_id = {"w", "x", "z"};
  CHECK(bleu4(ref, hyp_kw, true) > bleu4(ref, hyp_id, true));
  CHECK(bleu4(ref, hyp_kw, false) == doctest::Approx(bleu4(ref, hyp_id, false)));
}

}  // TEST_SUITE
