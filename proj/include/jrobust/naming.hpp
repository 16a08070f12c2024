#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jrobust/scope.hpp"
#include "jrobust/source_text.hpp"

namespace jrobust {

inline constexpr std::string_view kMaskToken = "<mask>";
inline constexpr int kNamingProtocolVersion = 1;

struct NamingRequest {
  std::string masked_context;  // every occurrence replaced by kMaskToken
  std::string original_name;
  DeclKind kind = DeclKind::LocalVariable;
  int k = 5;
};

struct NameCandidate {
  std::string name;
  double score = 0.0;  // similarity in [0, 1]

  friend bool operator==(const NameCandidate&, const NameCandidate&) = default;
};

class NamingProvider {
 public:
  virtual ~NamingProvider() = default;
  // Raw ranked suggestions; suggest_names() enforces the contract.
  virtual std::vector<NameCandidate> suggest(const NamingRequest& request) = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

// Curated dictionary keyed by the original name, declaration kind and the
// role inferred from the declaration text (type, loop header). Pure.
class BuiltinNamingProvider final : public NamingProvider {
 public:
  std::vector<NameCandidate> suggest(const NamingRequest& request) override;
  [[nodiscard]] std::string name() const override { return "builtin"; }
};

// Talks the JSON-lines naming protocol to `sh -c <command>` children. Keeps
// a pool of idle processes so concurrent callers each own one.
class ExternalNamingProvider final : public NamingProvider {
 public:
  explicit ExternalNamingProvider(
      std::string command,
      std::chrono::milliseconds timeout = std::chrono::seconds(10));
  ~ExternalNamingProvider() override;

  // Throws ProviderError on timeout, a dead child, or a malformed reply.
  std::vector<NameCandidate> suggest(const NamingRequest& request) override;
  [[nodiscard]] std::string name() const override { return "external:" + command_; }

 private:
  class Worker;
  std::unique_ptr<Worker> acquire();
  void release(std::unique_ptr<Worker> worker);

  std::string command_;
  std::chrono::milliseconds timeout_;
  std::mutex mutex_;
  std::vector<std::unique_ptr<Worker>> idle_;
};

// Builds the request for a declaration: the compilation unit with every
// bound occurrence masked.
NamingRequest make_naming_request(const SourceText& text, const ScopeTable& table,
                                  const Declaration& decl, int k);

std::string encode_request(const NamingRequest& request);
// Throws ProviderError on a protocol violation.
std::vector<NameCandidate> decode_response(std::string_view line);

// Contract-enforcing wrapper: at most k distinct valid candidates, none equal
// to the original, sorted by descending score with stable ties.
std::vector<NameCandidate> suggest_names(const NamingRequest& request,
                                         NamingProvider& provider);

// Highest-scored candidate absent from `visible`; if all collide, the top
// candidate with the smallest numeric suffix (2, 3, ...) that is free.
std::string select_name(const std::vector<NameCandidate>& candidates,
                        const std::set<std::string, std::less<>>& visible);

}  // namespace jrobust
