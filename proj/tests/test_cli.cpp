// End-to-end tests for pprtool: output text and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ppr/matrix.hpp"
#include "ppr/sequence.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(PPRTOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& contents) {
  static int counter = 0;
  const std::string path =
      (std::filesystem::temp_directory_path() /
       ("pprtool_test_" + std::to_string(counter++) + ".txt"))
          .string();
  std::ofstream file(path);
  file << contents;
  return path;
}

}  // namespace

TEST_CASE("compute") {
  const std::string id3 = write_temp("3\n1 0 0\n0 1 0\n0 0 1\n");
  auto r = run("compute " + id3);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0111\n");

  const std::string zero3 = write_temp("3\n0 0 0\n0 0 0\n0 0 0\n");
  r = run("compute " + zero3);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1000\n");

  const std::string skew2 = write_temp("2\n0 5\n-5 0\n");
  r = run("compute " + skew2 + " --perrank");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "101\n2\n");

  r = run("compute no_such_file.txt");
  CHECK(r.exit_code == 2);

  const std::string ragged = write_temp("2\n1 2 3\n4 5\n");
  r = run("compute " + ragged);
  CHECK(r.exit_code == 2);

  // order cap: a 21x21 matrix is rejected, accepted with --max-order.
  // The all-ones matrix keeps the computation cheap (every order succeeds
  // on its first principal submatrix).
  std::string big = "21\n";
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) big += j ? " 1" : "1";
    big += "\n";
  }
  const std::string big_path = write_temp(big);
  CHECK(run("compute " + big_path).exit_code == 2);
  r = run("compute " + big_path + " --max-order 21");
  CHECK(r.exit_code == 0);
  CHECK(r.out == std::string(1, '0') + std::string(21, '1') + "\n");
}

TEST_CASE("check") {
  auto r = run("check 101110101 --family symmetric");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "NOT-REALIZABLE window-bound\n");

  r = run("check 0111 --family nonnegative");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "REALIZABLE\n");

  r = run("check 1010100 --family skew-tree");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "REALIZABLE m=2\n");

  r = run("check 101100 --family symmetric");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "REALIZABLE l=1 k=1 m=1\n");

  CHECK(run("check 01x1 --family nonnegative").exit_code == 2);
  CHECK(run("check 0111 --family quaternion").exit_code == 2);
}

TEST_CASE("realize") {
  auto r = run("realize 101010 --family symmetric");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5\n0 1 0 0 0\n1 0 0 0 0\n0 0 0 1 0\n0 0 1 0 0\n0 0 0 0 0\n");

  r = run("realize 10010100100 --family nonnegative --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph G {") != std::string::npos);
  CHECK(r.out.find("3 -> 1;") != std::string::npos);
  CHECK(r.out.find("8 -> 1;") != std::string::npos);

  // realize output re-parses and recomputes to the same sequence
  r = run("realize 110 --family nonnegative --verify");
  CHECK(r.exit_code == 0);
  const ppr::IntMatrix witness = ppr::parse_matrix(r.out);
  CHECK(ppr::ppr_sequence(witness).str() == "110");

  CHECK(run("realize 0110 --family nonnegative").exit_code == 1);
  CHECK(run("realize abc --family nonnegative").exit_code == 2);
}

TEST_CASE("verify") {
  auto r = run("verify 101100 --family symmetric");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "OK\n");

  r = run("verify 0110 --family nonnegative");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "NOT-REALIZABLE zero-leading-gap\n");

  r = run("verify 10 --family skew-tree");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "OK\n");
}

TEST_CASE("enumerate") {
  auto r = run("enumerate --n 2 --family nonnegative");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "011\n100\n101\n110\n111\n");

  r = run("enumerate --n 1 --family skew-tree");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "10\n");

  r = run("enumerate --n 4 --family nonnegative --exhaustive");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  CHECK(run("enumerate --n 6 --family nonnegative --exhaustive").exit_code == 2);
  CHECK(run("enumerate --n 0 --family nonnegative").exit_code == 2);
}
