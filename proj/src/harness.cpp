#include "jrobust/harness.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <unistd.h>

#include "jrobust/error.hpp"
#include "jrobust/process.hpp"
#include "jrobust/source_text.hpp"
#include "jrobust/syntax_tree.hpp"

namespace jrobust {

namespace {

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

bool executable(const fs::path& p) { return ::access(p.c_str(), X_OK) == 0; }

std::string tail(std::string_view s, std::size_t n = 4000) {
  if (s.size() <= n) return std::string(s);
  return "..." + std::string(s.substr(s.size() - n));
}

}  // namespace

Toolchain Toolchain::discover(const std::optional<fs::path>& jdk_home) {
  Toolchain t;
  auto from_home = [&](const fs::path& home) {
    const fs::path javac = home / "bin" / "javac";
    const fs::path java = home / "bin" / "java";
    if (!executable(javac)) {
      throw InfrastructureError("no javac under " + home.string() + "/bin");
    }
    if (!executable(java)) {
      throw InfrastructureError("no java launcher under " + home.string() + "/bin");
    }
    t.javac = {javac.string()};
    t.java = {java.string()};
    t.javac_flags = {"-nowarn"};
  };
  if (jdk_home) {
    from_home(*jdk_home);
  } else if (auto javac = env("JROBUST_JAVAC")) {
    t.javac = split_words(*javac);
    if (auto java = env("JROBUST_JAVA")) {
      t.java = split_words(*java);
    } else if (auto p = find_on_path("java"); !p.empty()) {
      t.java = {p.string()};
    } else {
      throw InfrastructureError("JROBUST_JAVAC is set but no java launcher was found");
    }
  } else if (auto home = env("JDK_HOME")) {
    from_home(*home);
  } else if (auto home = env("JAVA_HOME"); home && executable(fs::path(*home) / "bin/javac")) {
    from_home(*home);
  } else {
    const auto javac = find_on_path("javac");
    const auto java = find_on_path("java");
    if (javac.empty() || java.empty()) {
      throw InfrastructureError(
          "no Java toolchain: pass --jdk-home or set JDK_HOME (a JDK with javac)");
    }
    t.javac = {javac.string()};
    t.java = {java.string()};
    t.javac_flags = {"-nowarn"};
  }
  if (auto flags = env("JROBUST_JAVAC_FLAGS")) t.javac_flags = split_words(*flags);
  if (auto flags = env("JROBUST_JAVA_FLAGS")) t.java_flags = split_words(*flags);
  if (auto cp = env("JROBUST_CLASSPATH")) t.classpath = *cp;
  return t;
}

std::string_view to_string(TestStatus s) {
  switch (s) {
    case TestStatus::Pass:
      return "pass";
    case TestStatus::Fail:
      return "fail";
    case TestStatus::CompileError:
      return "compile-error";
    case TestStatus::Timeout:
      return "timeout";
    case TestStatus::Crash:
      return "crash";
  }
  return "crash";
}

std::string qualified_class_name(std::string_view source) {
  const SourceText text{std::string(source)};
  const SyntaxTree tree = parse_source(text);
  std::string package;
  for (NodeId c : tree.named_children(tree.root())) {
    const auto& node = tree.node(c);
    if (node.kind == "package_declaration") {
      for (NodeId k : tree.named_children(c)) {
        const auto& kind = tree.node(k).kind;
        if (kind == "scoped_identifier" || kind == "identifier") {
          package = std::string(text.slice(tree.node(k).span));
        }
      }
    } else if (node.kind == "class_declaration" || node.kind == "interface_declaration" ||
               node.kind == "enum_declaration" || node.kind == "record_declaration") {
      const NodeId name = tree.child_by_field(c, "name");
      if (name == kNoNode) continue;
      std::string cls(text.slice(tree.node(name).span));
      return package.empty() ? cls : package + "." + cls;
    }
  }
  return {};
}

std::string java_file_name(std::string_view source) {
  std::string q = qualified_class_name(source);
  if (q.empty()) throw InputError("compilation unit declares no top-level type");
  const auto dot = q.rfind('.');
  return (dot == std::string::npos ? q : q.substr(dot + 1)) + ".java";
}

bool declares_main(std::string_view source) {
  static const std::regex main_re(R"(static\s+(final\s+)?void\s+main\s*\()");
  return std::regex_search(source.begin(), source.end(), main_re);
}

Harness::Harness(Toolchain toolchain, HarnessOptions options)
    : toolchain_(std::move(toolchain)), options_(std::move(options)) {
  if (toolchain_.javac.empty() || toolchain_.java.empty()) {
    throw ContractViolation("incomplete Java toolchain");
  }
}

fs::path Harness::make_workdir() const {
  const fs::path root =
      options_.temp_root.empty() ? fs::temp_directory_path() : options_.temp_root;
  fs::create_directories(root);
  std::string pattern = (root / "jrobust-XXXXXX").string();
  if (::mkdtemp(pattern.data()) == nullptr) {
    throw InfrastructureError("cannot create a work directory under " + root.string());
  }
  return pattern;
}

CompileResult Harness::compile(const std::vector<SourceFile>& files,
                               const fs::path& workdir) const {
  CompileResult result;
  const fs::path src = workdir / "src";
  result.artifacts_dir = workdir / "classes";
  fs::create_directories(src);
  fs::create_directories(result.artifacts_dir);
  std::vector<std::string> argv = toolchain_.javac;
  argv.insert(argv.end(), toolchain_.javac_flags.begin(), toolchain_.javac_flags.end());
  argv.insert(argv.end(), {"-encoding", "UTF-8", "-d",
                           result.artifacts_dir.string()});
  if (!toolchain_.classpath.empty()) argv.insert(argv.end(), {"-classpath", toolchain_.classpath});
  for (const SourceFile& f : files) {
    const fs::path p = src / f.file_name;
    std::ofstream out(p, std::ios::binary);
    out << f.content;
    if (!out) throw InfrastructureError("cannot write " + p.string());
    argv.push_back(p.string());
  }
  ProcessOptions opts;
  opts.cwd = workdir;
  opts.timeout = options_.timeout * 4;
  const ProcessResult r = run_process(argv, opts);
  result.success = r.ok();
  result.diagnostics = r.err + r.out;
  if (r.timed_out) result.diagnostics += "\ncompiler timed out";
  return result;
}

TestVerdict Harness::run_tests(const CompileResult& compiled,
                               const std::string& test_class,
                               std::chrono::milliseconds timeout,
                               bool has_main) const {
  if (!compiled.success) {
    return {TestStatus::CompileError, {}, tail(compiled.diagnostics)};
  }
  if (timeout.count() <= 0) timeout = options_.timeout;
  std::string cp = compiled.artifacts_dir.string();
  if (!toolchain_.classpath.empty()) cp += ":" + toolchain_.classpath;
  std::vector<std::string> argv = toolchain_.java;
  argv.insert(argv.end(), toolchain_.java_flags.begin(), toolchain_.java_flags.end());
  argv.insert(argv.end(), {"-cp", cp});
  if (!has_main) argv.push_back("org.junit.runner.JUnitCore");
  argv.push_back(test_class);
  ProcessOptions opts;
  opts.cwd = compiled.artifacts_dir.parent_path();
  opts.timeout = timeout;
  const ProcessResult r = run_process(argv, opts);
  TestVerdict v;
  v.duration = r.duration;
  if (r.timed_out) {
    v.status = TestStatus::Timeout;
    v.detail = "timed out after " + std::to_string(timeout.count()) + " ms";
  } else if (r.signaled) {
    v.status = TestStatus::Crash;
    v.detail = "killed by signal " + std::to_string(r.signal) + "\n" + tail(r.err);
  } else if (r.exit_code == 0) {
    v.status = TestStatus::Pass;
  } else {
    v.status = TestStatus::Fail;
    v.detail = "exit " + std::to_string(r.exit_code) + "\n" + tail(r.err + r.out);
  }
  return v;
}

TestVerdict Harness::evaluate(const std::vector<SourceFile>& program,
                              const SourceFile& test,
                              std::chrono::milliseconds timeout) const {
  const fs::path workdir = make_workdir();
  struct Cleanup {
    const fs::path& dir;
    bool keep;
    ~Cleanup() {
      std::error_code ec;
      if (!keep) fs::remove_all(dir, ec);
    }
  } cleanup{workdir, options_.keep_workdirs};
  std::vector<SourceFile> files = program;
  files.push_back(test);
  const CompileResult compiled = compile(files, workdir);
  return run_tests(compiled, qualified_class_name(test.content), timeout,
                   declares_main(test.content));
}

}  // namespace jrobust
