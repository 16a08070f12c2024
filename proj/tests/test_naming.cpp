#include <doctest.h>

#include <fstream>
#include <set>
#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "jrobust/error.hpp"
#include "jrobust/naming.hpp"
#include "jrobust/transforms.hpp"

using namespace jrobust;

namespace {

std::string script(std::string_view name) {
  return (testdata::fixtures_dir() / "naming" / name).string();
}

NamingRequest request_for(const Program& p, std::string_view name, int k = 5) {
  for (const auto& d : p.scopes.declarations()) {
    if (d.name == name) return make_naming_request(p.text, p.scopes, d, k);
  }
  FAIL("no declaration " << name);
  return {};
}

const Program& counter_program() {
  static const Program p = Program::parse(SourceText(
      "class A {\n  int f(int[] xs) {\n    int temp = 0;\n    for (int i = 0; i < xs.length; i++) {\n"
      "      if (xs[i] > 0) {\n        temp++;\n      }\n    }\n    return temp;\n  }\n}\n"));
  return p;
}

}  // namespace

TEST_SUITE("naming") {

TEST_CASE("request masks every occurrence") {
  const NamingRequest r = request_for(counter_program(), "temp");
  CHECK(r.original_name == "temp");
  CHECK(r.kind == DeclKind::LocalVariable);
  CHECK(r.masked_context.find("temp") == std::string::npos);
  std::size_t masks = 0;
  for (std::size_t at = 0; (at = r.masked_context.find(kMaskToken, at)) != std::string::npos;
       at += kMaskToken.size()) {
    ++masks;
  }
  CHECK(masks == 3);
}

TEST_CASE("temp counter suggests count") {
  BuiltinNamingProvider builtin;
  const auto c = suggest_names(request_for(counter_program(), "temp"), builtin);
  CHECK(std::ranges::any_of(c, [](const NameCandidate& n) { return n.name == "count"; }));
}

TEST_CASE("built-in provider is pure") {
  BuiltinNamingProvider builtin;
  const auto req = request_for(counter_program(), "temp", 1);
  const auto a = suggest_names(req, builtin);
  const auto b = suggest_names(req, builtin);
  REQUIRE(a.size() == 1);
  CHECK(a == b);
}

TEST_CASE("candidate contract over the corpus") {
  BuiltinNamingProvider builtin;
  for (const auto& path : testdata::corpus_files()) {
    const Program p = Program::parse(testdata::load(path));
    for (const auto& d : p.scopes.declarations()) {
      const auto c = suggest_names(make_naming_request(p.text, p.scopes, d, 5), builtin);
      CAPTURE(d.name);
      CHECK(c.size() <= 5);
      std::set<std::string> seen;
      for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].name != d.name);
        CHECK(is_valid_identifier(c[i].name));
        CHECK(seen.insert(c[i].name).second);
        CHECK(c[i].score >= 0.0);
        CHECK(c[i].score <= 1.0);
        if (i) CHECK(c[i - 1].score >= c[i].score);
      }
    }
  }
}

TEST_CASE("select_name examples") {
  const std::set<std::string, std::less<>> none;
  CHECK(select_name({{"count", 0.9}, {"value", 0.8}}, none) == "count");
  CHECK(select_name({{"count", 0.9}}, {"count"}) == "count2");
  CHECK(select_name({{"count", 0.9}}, {"count", "count2"}) == "count3");
  CHECK(select_name({{"count", 0.9}, {"value", 0.8}}, {"count"}) == "value");
  CHECK(select_name({{"first", 0.5}, {"second", 0.5}}, none) == "first");
}

TEST_CASE("select_name is invariant under score scaling") {
  const std::vector<NameCandidate> c = {{"a", 0.3}, {"b", 0.6}, {"c", 0.6}, {"d", 0.1}};
  const std::set<std::string, std::less<>> visible = {"b"};
  for (double f : {0.01, 0.5, 1.0}) {
    std::vector<NameCandidate> scaled = c;
    for (auto& n : scaled) n.score *= f;
    CHECK(select_name(scaled, visible) == "c");
  }
}

TEST_CASE("protocol encoding") {
  const NamingRequest r{"int <mask> = 0;", "temp", DeclKind::LocalVariable, 3};
  const auto j = nlohmann::json::parse(encode_request(r));
  CHECK(j.at("v") == 1);
  CHECK(j.at("context") == "int <mask> = 0;");
  CHECK(j.at("original") == "temp");
  CHECK(j.at("kind") == "local-variable");
  CHECK(j.at("k") == 3);
  CHECK(encode_request(r).find('\n') == std::string::npos);

  const auto c = decode_response(R"({"v":1,"candidates":[{"name":"count","score":0.5}]})");
  REQUIRE(c.size() == 1);
  CHECK(c[0] == NameCandidate{"count", 0.5});
  CHECK_THROWS_AS((void)decode_response(R"({"v":2,"candidates":[]})"), ProviderError);
  CHECK_THROWS_AS((void)decode_response("nope"), ProviderError);
  CHECK_THROWS_AS((void)decode_response(R"({"v":1})"), ProviderError);
}

TEST_CASE("external provider results pass through the contract") {
  ExternalNamingProvider ext("sh " + script("fixed_provider.sh"));
  const auto c = suggest_names(request_for(counter_program(), "temp", 5), ext);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == NameCandidate{"beta", 0.9});
  CHECK(c[1] == NameCandidate{"alpha", 0.4});
}

TEST_CASE("external provider sees the masked request") {
  const std::filesystem::path log =
      std::filesystem::temp_directory_path() / ("jrobust_naming_" + std::to_string(::getpid()));
  std::filesystem::remove(log);
  {
    ExternalNamingProvider ext("sh " + script("echo_request_provider.sh") + " " + log.string());
    CHECK(ext.suggest(request_for(counter_program(), "temp"))[0].name == "gamma");
    CHECK(ext.suggest(request_for(counter_program(), "xs"))[0].name == "gamma");
  }
  std::ifstream in(log);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("v") == 1);
    CHECK(j.at("context").get<std::string>().find("<mask>") != std::string::npos);
    ++n;
  }
  CHECK(n == 2);
  std::filesystem::remove(log);
}

TEST_CASE("external provider failures raise ProviderError") {
  using namespace std::chrono_literals;
  const auto req = request_for(counter_program(), "temp");
  ExternalNamingProvider slow("sh " + script("silent_provider.sh"), 300ms);
  const auto start = std::chrono::steady_clock::now();
  CHECK_THROWS_AS((void)slow.suggest(req), ProviderError);
  CHECK(std::chrono::steady_clock::now() - start < 5s);
  ExternalNamingProvider garbage("sh " + script("garbage_provider.sh"));
  CHECK_THROWS_AS((void)garbage.suggest(req), ProviderError);
  ExternalNamingProvider missing("/nonexistent/provider");
  CHECK_THROWS_AS((void)missing.suggest(req), ProviderError);
}

}  // TEST_SUITE
