// Runs the installed binary as a subprocess against the golden manifest.
// Set CATMAG_UPDATE_GOLDEN=1 to rewrite the expected transcripts.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "golden_cases.hpp"

namespace catmag::testing {
namespace {

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_binary(const std::vector<std::string>& args, const std::string& err_path) {
  std::string cmd = shell_quote(CATMAG_BINARY);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>" + shell_quote(err_path);
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, read_file(err_path)};
}

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesAndIsStable) {
  const GoldenCase& c = GetParam();
  const std::string err_path = (std::filesystem::temp_directory_path() / ("catmag_golden_" + c.name + ".err")).string();
  const Outcome first = run_binary(c.args, err_path);
  const Outcome second = run_binary(c.args, err_path);
  std::filesystem::remove(err_path);
  const std::string a = golden_transcript(first.code, first.out, first.err, CATMAG_FIXTURE_DIR);
  const std::string b = golden_transcript(second.code, second.out, second.err, CATMAG_FIXTURE_DIR);
  EXPECT_EQ(a, b);
  const std::string path = std::string(CATMAG_GOLDEN_DIR) + "/" + c.name + ".out";
  if (const char* update = std::getenv("CATMAG_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    write_file(path, a);
    return;
  }
  EXPECT_EQ(a, read_file(path));
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTest,
                         ::testing::ValuesIn(load_golden_cases(std::string(CATMAG_GOLDEN_DIR) + "/cases.tsv",
                                                               CATMAG_FIXTURE_DIR)),
                         [](const ::testing::TestParamInfo<GoldenCase>& info) {
                           std::string n = info.param.name;
                           for (char& ch : n)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return n;
                         });

}  // namespace
}  // namespace catmag::testing
