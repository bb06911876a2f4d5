#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symdyn/cli.hpp"

using namespace symdyn;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "symdyn-cli-test";
    fs::create_directories(path);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
};

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complexity subcommand emits the fibonacci table") {
  TempDir dir;
  const std::string fib = dir.file(
      "fib.json",
      R"({"type": "substitution", "alphabet": ["a1", "a2"],
          "images": {"a1": ["a2"], "a2": ["a2", "a1"]}})");
  const RunResult first = run({"complexity", fib, "-n", "4"});
  CHECK(first.status == 0);
  CHECK(first.out == "n,p\n1,2\n2,3\n3,4\n4,5\n");
  // Byte-identical across repeated runs on identical inputs.
  const RunResult second = run({"complexity", fib, "-n", "4"});
  CHECK(second.out == first.out);

  const RunResult json = run({"complexity", fib, "-n", "2", "--format", "json"});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"entries\"") != std::string::npos);
}

TEST_CASE("image subcommand applies the pair split") {
  TempDir dir;
  const std::string full2 =
      dir.file("full2.json", R"({"type": "full", "alphabet": ["a1", "a2"]})");
  const std::string split = dir.file(
      "split.json",
      R"({"source": ["a1", "a2"], "target": ["a1-", "a1+", "a2-", "a2+"],
          "images": {"a1": ["a1-", "a1+"], "a2": ["a2-", "a2+"]}})");
  const RunResult result = run({"image", full2, split, "-n", "4"});
  CHECK(result.status == 0);
  CHECK(result.out == "n,p\n1,4\n2,6\n3,8\n4,12\n");
}

TEST_CASE("recognize subcommand reports verdicts with exit 0") {
  TempDir dir;
  const std::string full_a = dir.file("full_a.json", R"({"type": "full", "alphabet": ["a"]})");
  const std::string sigma_aa = dir.file(
      "sigma_aa.json", R"({"source": ["a"], "target": ["a"], "images": {"a": ["a", "a"]}})");
  const RunResult result = run({"recognize", sigma_aa, full_a});
  CHECK(result.status == 0);  // a verdict, not an error
  CHECK(result.out.find("\"counterexample_found\"") != std::string::npos);
  CHECK(result.out.find("\"periodic_power\"") != std::string::npos);
}

TEST_CASE("entropy subcommand emits the profile csv") {
  TempDir dir;
  const std::string full2 =
      dir.file("full2e.json", R"({"type": "full", "alphabet": ["a1", "a2"]})");
  const RunResult result = run({"entropy", full2, "-n", "3"});
  CHECK(result.status == 0);
  CHECK(result.out ==
        "n,p,log_p_over_n\n1,2,0.6931471805599453\n2,4,0.6931471805599453\n"
        "3,8,0.6931471805599453\n");
}

TEST_CASE("counterexample subcommand passes at the default window") {
  const RunResult result = run({"counterexample", "--alphabet-size", "2", "-n", "12"});
  CHECK(result.status == 0);
  CHECK(result.out.find("\"pass\": true") != std::string::npos);
  CHECK(result.out.find("lemma-4.2-odd") != std::string::npos);
}

TEST_CASE("basis-change subcommand verifies the proof constants") {
  TempDir dir;
  const std::string x_pm = dir.file(
      "double_full2.json", R"({"type": "double", "inner": {"type": "full", "alphabet": ["a1", "a2"]}})");
  const std::string phi = dir.file(
      "phi.json",
      R"({"source": ["a1", "a2"], "target": ["a1", "a2"],
          "images": {"a1": ["a2", "a1"], "a2": ["a2", "a1", "a2"]}})");
  const std::string psi = dir.file(
      "psi.json",
      R"({"source": ["a1", "a2"], "target": ["a1", "a2"],
          "images": {"a1": ["a2^-1", "a1", "a1"], "a2": ["a1^-1", "a2"]}})");
  const RunResult result = run({"basis-change", x_pm, phi, psi, "-n", "4", "-L", "5"});
  CHECK(result.status == 0);
  CHECK(result.out.find("\"pass\": true") != std::string::npos);
  CHECK(result.out.find("\"C_BA\": 3") != std::string::npos);
  CHECK(result.out.find("\"C_AB\": 2") != std::string::npos);

  const RunResult mismatched = run({"basis-change", x_pm, phi, phi, "-n", "3"});
  CHECK(mismatched.status == 1);
  CHECK(mismatched.err.find("inverse") != std::string::npos);
}

TEST_CASE("output lands in a file when requested") {
  TempDir dir;
  const std::string full2 =
      dir.file("full2o.json", R"({"type": "full", "alphabet": ["a1", "a2"]})");
  const std::string out_path = (dir.path / "table.csv").string();
  const RunResult result = run({"complexity", full2, "-n", "3", "-o", out_path});
  CHECK(result.status == 0);
  CHECK(result.out.empty());
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == "n,p\n1,2\n2,4\n3,8\n");
}

TEST_CASE("malformed input exits nonzero with a message") {
  TempDir dir;
  const std::string broken = dir.file("broken.json", "{\"type\": \"full\"");
  const RunResult result = run({"complexity", broken, "-n", "3"});
  CHECK(result.status == 1);
  CHECK(!result.err.empty());

  const RunResult missing = run({"complexity", (dir.path / "nope.json").string(), "-n", "3"});
  CHECK(missing.status == 1);

  const RunResult unknown = run({"frobnicate"});
  CHECK(unknown.status == 1);
}

TEST_CASE("verify all prints one line per criterion and exits by verdict") {
  const RunResult result = run({"verify", "all"});
  CHECK(result.status == 0);
  int lines = 0;
  std::istringstream in(result.out);
  std::string line;
  while (std::getline(in, line)) {
    CHECK(line.rfind("PASS", 0) == 0);
    ++lines;
  }
  CHECK(lines == 10);
}
