#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "jrobust/source_text.hpp"

namespace jrobust::testdata {

inline std::filesystem::path fixtures_dir() { return JROBUST_FIXTURES_DIR; }
inline std::filesystem::path corpus_dir() { return fixtures_dir() / "corpus"; }
inline std::filesystem::path corpus_manifest() { return corpus_dir() / "corpus.jsonl"; }

// Every .java file of the fixture corpus, sorted.
inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(corpus_dir())) {
    if (e.path().extension() == ".java") out.push_back(e.path());
  }
  std::ranges::sort(out);
  return out;
}

inline SourceText load(const std::filesystem::path& p) { return SourceText(read_text_file(p)); }

}  // namespace jrobust::testdata
